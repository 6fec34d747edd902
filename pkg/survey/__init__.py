"""Naive generator search and the family sweep"""
from .search import naive_point_search
from .sweep import (
    GENERATOR_DEPENDENCE,
    deterministic_view,
    render_table,
    report_table,
    survey_one,
    sweep,
)
