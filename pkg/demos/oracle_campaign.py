"""Checking every predicate against brute force over GF(2).

All 1x2 sources of degree <= 1 get every added row of degree <= 2; each
candidate target's predicate verdict is compared with search membership.

Run: python3 demos/oracle_campaign.py
"""
from polycomplete.completion import MODES
from polycomplete.oracle import run_campaign

for mode in MODES:
    report = run_campaign(mode=mode)
    print(report.lines()[0])
    for line in report.lines()[1:6]:
        print(line)
