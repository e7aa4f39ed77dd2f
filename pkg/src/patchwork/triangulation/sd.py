"""Small-deviation triangulations (placeholder during bring-up)."""


def build_sd3(*a, **k):
    raise NotImplementedError


def build_sd4(*a, **k):
    raise NotImplementedError
