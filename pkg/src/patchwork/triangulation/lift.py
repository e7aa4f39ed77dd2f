"""Convexity certificates (placeholder during bring-up)."""


class LiftCertificate:
    pass


def certify_convexity(*a, **k):
    raise NotImplementedError


def construct_lift(*a, **k):
    raise NotImplementedError
