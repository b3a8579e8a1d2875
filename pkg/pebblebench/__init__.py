"""Pebblebench

Ehrenfeucht-Fraisse workbench for the descriptive complexity of
Subgraph Isomorphism on connected graphs.
"""
# flake8: noqa

from os import path as p


__version__ = "0.3.0"

PATH_PEBBLEBENCH = p.dirname(p.abspath(__file__))
PATH_PEBBLEBENCH_ASSET = p.join(PATH_PEBBLEBENCH, 'asset')
PATH_PEBBLEBENCH_MANIFEST = p.join(PATH_PEBBLEBENCH_ASSET, 'manifest.json')
