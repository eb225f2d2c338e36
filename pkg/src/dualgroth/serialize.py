"""Canonical JSON forms: partitions as integer arrays, coefficients as
canonical polynomial text, terms in the global partition order.
"""

import json

from .partitions import sort_key


def term_list(terms):
    keys = sorted(terms, key=sort_key)
    return [{"partition": list(la), "coeff": terms[la].text()} for la in keys]


def symfunc_json(f):
    return {"basis": "s", "terms": term_list(f.terms)}


def g_expansion_json(expansion):
    return {"basis": "g", "terms": term_list(expansion)}


def series_json(F, basis="s"):
    return {"basis": basis, "cap": F.cap, "terms": term_list(F.terms)}


def to_text(obj):
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def symfunc_text(f):
    return to_text(symfunc_json(f))


def series_text(F):
    return to_text(series_json(F))


def multipoly_text(p):
    entries = [{"exponents": list(e), "coeff": p.terms[e].text()}
               for e in sorted(p.terms, reverse=True)]
    return to_text({"nvars": p.nvars, "terms": entries})


def tensor_text(tensor):
    entries = [{"left": list(m), "right": list(n), "coeff": tensor.terms[(m, n)].text()}
               for m, n in sorted(tensor.terms, key=lambda mn: (sort_key(mn[0]), sort_key(mn[1])))]
    return to_text({"terms": entries})


def incidence_text(fn):
    entries = [{"from": list(mu), "to": list(nu), "coeff": fn.values[(mu, nu)].text()}
               for mu, nu in sorted(fn.values, key=lambda p: (sort_key(p[0]), sort_key(p[1])))]
    return to_text({"ground": list(fn.ground), "values": entries})
