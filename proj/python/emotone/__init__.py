"""Emotional-tone analysis and softening toolkit (C++ core bindings)."""

from emotone._core import (
    build_prompts,
    cosine_similarity,
    emotion_balance_index,
    flesch_reading_ease,
    high_impact_rate,
    holm_adjust,
    lexicon_classify,
    mock_detoxify,
    mock_embed,
    paired_t,
    pearson_correlation,
    percent_reduction,
    stimulus_score,
    student_t_cdf,
    text_stats,
    truncate_for_classifier,
    validate_rewrite,
    weekly_summary_json,
)

__all__ = [
    "build_prompts",
    "cosine_similarity",
    "emotion_balance_index",
    "flesch_reading_ease",
    "high_impact_rate",
    "holm_adjust",
    "lexicon_classify",
    "mock_detoxify",
    "mock_embed",
    "paired_t",
    "pearson_correlation",
    "percent_reduction",
    "stimulus_score",
    "student_t_cdf",
    "text_stats",
    "truncate_for_classifier",
    "validate_rewrite",
    "weekly_summary_json",
]
