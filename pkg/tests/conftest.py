import numpy as np

from holowind import ComplexPolynomial, LaurentExpression


def make_laurent(rng, band=6, min_terms=3, max_terms=6, exclude=(), force=None):
    """Random Laurent expression with exponents in [-band, band]."""
    exps = [e for e in range(-band, band + 1) if e not in exclude]
    k = int(rng.integers(min_terms, max_terms + 1))
    chosen = rng.choice(exps, size=min(k, len(exps)), replace=False)
    terms = {int(e): complex(rng.normal(), rng.normal()) for e in chosen}
    if force:
        terms.update(force)
    return LaurentExpression.from_dict(terms)


def nonvanishing_laurent(rng, max_roots=4, margin=0.05):
    """c * z**-m * prod(z - r_i) with all r_i off the circle.

    Returns (expression, winding known by construction).
    """
    nroots = int(rng.integers(0, max_roots + 1))
    rts = []
    while len(rts) < nroots:
        r = complex(rng.normal(), rng.normal())
        if abs(abs(r) - 1.0) >= margin and abs(r) < 2.5:
            rts.append(r)
    m = int(rng.integers(0, 4))
    c = complex(rng.normal(), rng.normal())
    while abs(c) < 0.1:
        c = complex(rng.normal(), rng.normal())
    poly = ComplexPolynomial.from_roots(rts, leading=c)
    expr = LaurentExpression.from_polynomial(poly).shifted(-m)
    wind = sum(1 for r in rts if abs(r) < 1) - m
    return expr, wind


def roots_off_circle(rng, count, margin=0.02, radius=1.8):
    """Points uniform-ish in a disc, kept at least `margin` from |z| = 1."""
    out = []
    while len(out) < count:
        r = radius * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        if abs(abs(r) - 1.0) >= margin:
            out.append(complex(r))
    return out
