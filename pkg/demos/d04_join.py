"""
Joins give higher-dimensional examples
======================================

The join of two copies is a flag 7-sphere on 24 vertices. Two of its three
properties are checked directly. The equator property is out of reach of
2^24-subset enumeration, and the report says so.
"""

from flagsphere.certification import question_1_5_report
from flagsphere.constructions import delta_12_33, k_fold_join

J = k_fold_join(delta_12_33(), 2)
print(J)
rep = question_1_5_report(J)
print(rep.as_dict())
