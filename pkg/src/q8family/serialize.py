"""JSON documents and the on-disk table cache.

The table document schema (versioned by its "format" field):

    {"format": 1, "prime": p, "group_order": 8 p^2,
     "classes": [{"rep": [v0, v1, a, b, c, d], "size": ..., "centralizer": ...}],
     "characters": [{"name": ..., "degree": ..., "indicator": ...,
                     "values": [{"n": ..., "coeffs": [[num, den], ...]}, ...]}]}

Values appear in class order; coefficient numerators and denominators are
exact decimal strings.  Writes go through a temp file plus rename so a
crashed run never leaves partial JSON behind.
"""

import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path

from .cyclotomic import Cyclotomic

TABLE_FORMAT = 1
REPORT_FORMAT = 1


def _frac_pair(f):
    f = Fraction(f)
    return [str(f.numerator), str(f.denominator)]


def table_document(table):
    """The serializable form of a character table."""
    ct = table.class_table
    return {
        "format": TABLE_FORMAT,
        "prime": ct.p,
        "group_order": ct.order,
        "classes": [
            {
                "rep": list(ct.rep_element(k)),
                "size": ct.sizes[k],
                "centralizer": ct.centralizer_orders[k],
            }
            for k in range(ct.n_classes)
        ],
        "characters": [
            {
                "name": r.name,
                "degree": r.degree,
                "indicator": r.indicator,
                "values": [v.to_json_obj() for v in r.values],
            }
            for r in table.rows
        ],
    }


def document_values(doc):
    """Character values of a document, reconstructed as exact Cyclotomics."""
    return [
        [Cyclotomic.from_json_obj(v) for v in ch["values"]]
        for ch in doc["characters"]
    ]


def table_documents_equivalent(a, b):
    """Deep exact equality: integers verbatim, values as cyclotomic numbers."""
    if (a["format"], a["prime"], a["group_order"]) != (b["format"], b["prime"], b["group_order"]):
        return False
    if a["classes"] != b["classes"]:
        return False
    chars_a, chars_b = a["characters"], b["characters"]
    if len(chars_a) != len(chars_b):
        return False
    for ca, cb in zip(chars_a, chars_b):
        if (ca["name"], ca["degree"], ca["indicator"]) != (cb["name"], cb["degree"], cb["indicator"]):
            return False
        va = [Cyclotomic.from_json_obj(v) for v in ca["values"]]
        vb = [Cyclotomic.from_json_obj(v) for v in cb["values"]]
        if len(va) != len(vb) or any(x != y for x, y in zip(va, vb)):
            return False
    return True


def report_document(report):
    """The serializable form of a verification Report."""
    breakdown = dict(report.indicator_breakdown)
    breakdown["restriction_inner"] = _frac_pair(breakdown["restriction_inner"])
    breakdown["numerator"] = _frac_pair(breakdown["numerator"])
    doc = {
        "format": REPORT_FORMAT,
        "kind": "verification_report",
        "prime": report.prime,
        "label": list(report.label),
        "orbit_rep": list(report.orbit_rep),
        "group_order": report.group_order,
        "class_count": report.class_count,
        "degree_multiset": list(report.degree_multiset),
        "indicator_list": list(report.indicator_list),
        "row_names": list(report.row_names),
        "stabilizer_size": report.stabilizer_size,
        "induced_norm": _frac_pair(report.induced_norm),
        "indicator_induced": report.indicator_induced,
        "indicator_induced_direct": report.indicator_induced_direct,
        "indicator_psi": report.indicator_psi,
        "indicator_psi_direct": report.indicator_psi_direct,
        "psi_multiplicity": report.psi_multiplicity,
        "decomposition": dict(report.decomposition),
        "indicator_breakdown": breakdown,
        "claims": dict(report.claims),
        "checks": dict(report.checks),
        "square_locus_size": report.square_locus_size,
        "overall_pass": report.overall_pass,
        "timings": dict(report.timings),
    }
    if report.alt_subgroup is not None:
        doc["alt_subgroup"] = dict(report.alt_subgroup)
    return doc


def scan_document(lo, hi, summaries):
    return {
        "format": REPORT_FORMAT,
        "kind": "scan_summary",
        "range": [lo, hi],
        "records": summaries,
        "all_pass": all(r["pass"] for r in summaries),
    }


def canonical_json(obj):
    """The one serialization used everywhere, so outputs are byte-stable."""
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def write_atomic(path, text):
    """Write text to path via a temp file in the same directory plus rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cache_path(cache_dir, p):
    return Path(cache_dir) / f"table_p{p}.json"


def load_cached_table(cache_dir, p):
    """The cached document for p, or None if absent, stale or unreadable."""
    path = cache_path(cache_dir, p)
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if not isinstance(doc, dict) or doc.get("format") != TABLE_FORMAT:
        return None
    if doc.get("prime") != p:
        return None
    return doc


def store_cached_table(cache_dir, p, doc):
    write_atomic(cache_path(cache_dir, p), canonical_json(doc))
