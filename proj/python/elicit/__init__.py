"""Requirement elicitation technique selection.

Thin Python layer over the C++ engine. ``recommend_profile`` accepts a
profile document path, its text, or a payload dict.
"""

import json
import os

from ._core import (
    Dataset,
    Decision,
    ElicitError,
    Profile,
    Recommendation,
    apply_feasibility,
    combine,
    default_dataset,
    is_process_selected,
    load_dataset,
    load_dataset_text,
    parse_profile_json,
    parse_profile_text,
    recommend,
    select_by_people,
    select_by_process,
    select_by_project,
    what_if_diff,
)

__all__ = [
    "Dataset",
    "Decision",
    "ElicitError",
    "Profile",
    "Recommendation",
    "apply_feasibility",
    "combine",
    "default_dataset",
    "is_process_selected",
    "load_dataset",
    "load_dataset_text",
    "parse_profile",
    "parse_profile_json",
    "parse_profile_text",
    "recommend",
    "recommend_profile",
    "select_by_people",
    "select_by_process",
    "select_by_project",
    "what_if_diff",
]


def parse_profile(source, dataset=None):
    """Returns (Profile, [Decision]) from a path, document text, or payload dict."""
    dataset = dataset or default_dataset()
    if isinstance(source, dict):
        return parse_profile_json(json.dumps(source), dataset)
    if isinstance(source, os.PathLike) or (isinstance(source, str) and "\n" not in source and os.path.exists(source)):
        with open(source, encoding="utf-8") as f:
            return parse_profile_text(f.read(), dataset)
    return parse_profile_text(source, dataset)


def recommend_profile(source, dataset=None):
    dataset = dataset or default_dataset()
    profile, decisions = parse_profile(source, dataset)
    return recommend(profile, dataset, decisions)
