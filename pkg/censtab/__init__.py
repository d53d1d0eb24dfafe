"""
Central Stability Toolkit

Exact computations with graded modules over combinatorial categories:
Kan-extension colimits, truncated tensor products, central and d-step
central stability, presentation degrees and degree-d generation of the
ideal of relations.
"""

__version__ = "1.0.0"
__author__ = "censtab developers"
__description__ = "Central stability checks for modules over combinatorial categories"
