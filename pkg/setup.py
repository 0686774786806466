"""
FOLCALC is an open-source project for exact symbolic computation with polynomial
codimension-one foliations: integrability, singular schemes, graded first-order
unfoldings, and singularities of maps, driven from a small session language and the
``folcalc`` command line tool.

:license: AGPL-3.0
"""
from setuptools import setup

setup()
