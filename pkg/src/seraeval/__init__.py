"""Summarization evaluation by relevance analysis, plus ROUGE, pyramid scoring,
baseline summarizers and correlation analysis."""

__version__ = "0.1.0"
