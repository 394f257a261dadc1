"""Scenario runs: deterministic JSON reports with replay commands.

Run with ``python3 notebooks/04_scenarios.py``. Each report here can be
reproduced from the shell with the command in its ``replay`` field.
"""
import json

from ohmrush import ScenarioConfig, run_scenario
from ohmrush.scenarios import SCENARIOS

for name in SCENARIOS:
    rep = run_scenario(ScenarioConfig(name))
    print(rep.summary())

# The sweep records a witness and its replay line for every target.
rep = run_scenario(ScenarioConfig("gorenstein-witness-sweep"))
first = rep.checks[0]
print("\nfirst target:", first["f"], "witness:", first["witness"])
print("replay:", first["replay"])

# Worker count changes the wall clock, never the report.
a = run_scenario(ScenarioConfig("transport-suite", samples=200), workers=1).to_json()
b = run_scenario(ScenarioConfig("transport-suite", samples=200), workers=8).to_json()
print("\nidentical across workers:", a == b)
print(json.dumps(json.loads(a)["counts"]))
