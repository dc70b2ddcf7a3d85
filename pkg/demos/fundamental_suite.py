"""
Fundamental fields, certified
=============================

For a handful of Lie types, expand every fundamental field Y_i(z), check the
screening-cancellation certificate, and compare with the closed-form catalog.
"""

import time

from wqt import catalog, compare, fundamental, is_covered, root_data, verify_cancellation

types = ["A3", "B3", "C3", "D4", "G2", "F4", "E6"]

print(f"{'type':5s} {'node':>4s} {'status':>10s} {'size':>5s} {'pairs':>6s}  catalog")
t0 = time.perf_counter()
for name in types:
    rd = root_data(name)
    for node in rd.nodes:
        fe = fundamental(rd, node)
        line = f"{name:5s} {node:4d} {fe.status:>10s} {len(fe):5d}"
        if fe.status != "Completed":
            print(line)
            continue
        report = verify_cancellation(fe)
        line += f" {len(report.pairings):6d}"
        if is_covered(rd.lie_type, node):
            diff = compare(fe, catalog(rd.lie_type, node))
            line += "  match" if diff.match else "  MISMATCH"
        else:
            line += "  -"
        print(line)
print(f"\n{time.perf_counter() - t0:.2f}s in total")
