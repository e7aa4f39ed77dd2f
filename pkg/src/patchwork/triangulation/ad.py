"""Asymptotic-deviation triangulation (placeholder during bring-up)."""


def build_ad4(*a, **k):
    raise NotImplementedError


def default_ad_triples(*a, **k):
    raise NotImplementedError
