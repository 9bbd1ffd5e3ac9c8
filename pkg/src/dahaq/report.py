"""Full verification run and machine-readable report assembly.

The report is pure data derived from exact computations with fixed seeds, so
identical builds produce byte-identical JSON.  Findings carry stable ids; the
expected module decides which outcomes are MUST-PASS and which are documented
discrepancies.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction

from . import expected
from .classical import (
    ClassicalElement,
    classical_monodromy,
    closed_form_geodesics,
    fricke_residual,
    geodesic_trace_products,
    monodromy_words,
    omega_constants,
    parameter_bridge,
    perimeter_g,
    rle_matrices,
)
from .confluence import (
    apply_limit,
    builtin_specs,
    exploratory_chain,
    relation_limit_audit,
    scaled_identity_audits,
)
from .families import (
    FAMILIES,
    build_family,
    build_qmonodromy,
    cross_check_rep_vs_monodromy,
    cubic_candidates,
    default_audits,
    qcomm_residuals,
    qmon_suite,
    quantum_geodesics_elements,
    relation_suite,
    sign_oracle,
    xyt_presentation,
)
from .matrices import Matrix2
from .scalars import GaussianRational, Q2, Scalar
from .torus import SIGMA, q_scalar
from .transforms import (
    TRANSFORM_NAMES,
    apply_transform,
    braid_relation_check,
    classical_braid_conservation,
    composite_check,
    cyclic_product_value,
    involution_check,
    relation_preservation,
)

TOOL_NAME = "dahaq"
TOOL_VERSION = "0.1.0"


def _mat_text(matrix: Matrix2 | None):
    return None if matrix is None else matrix.text()


# -- classical suite ---------------------------------------------------------------


def _random_classical(rng, max_terms=3):
    out = ClassicalElement.zero()
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(-2, 2) for _ in range(6))
        coeff = GaussianRational(
            Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-2, 2))
        )
        out = out + ClassicalElement({exps: coeff})
    return out


def classical_suite(samples=25, seed=1):
    """Monodromy, geodesic, cubic and Poisson identities over the shear ring."""
    results = []
    one = ClassicalElement.one()
    zero = ClassicalElement.zero()
    identity = Matrix2(one, zero, zero, one)

    R, L, E = rle_matrices()
    results.append(("rle-R-cubed", (R * R * R + identity).is_zero()))
    results.append(("rle-E-squared", (E(1) * E(1) + identity).is_zero()))
    results.append(
        ("rle-dets", all((m.det() - one).is_zero() for m in (R, L, E(1), E(4))))
    )

    m1, m2, m3, m_inf = classical_monodromy()
    results.append(
        ("monodromy-product", (m1 * m2 * m3 * m_inf - identity).is_zero())
    )
    results.append(
        (
            "monodromy-dets",
            all((m.det() - one).is_zero() for m in (m1, m2, m3, m_inf)),
        )
    )
    results.append(
        (
            "monodromy-trace-sign",
            all(
                (m.trace() + perimeter_g(i)).is_zero()
                for i, m in ((1, m1), (2, m2), (3, m3))
            ),
        )
    )
    w1, w2, w3 = monodromy_words()
    results.append(
        (
            "monodromy-words",
            (w1 - m1).is_zero() and (w2 - m2).is_zero() and (w3 - m3).is_zero(),
        )
    )

    g23, g31, g12 = geodesic_trace_products()
    c23, c31, c12 = closed_form_geodesics()
    results.append(
        (
            "geodesic-words",
            (g23 - c23).is_zero() and (g31 - c31).is_zero() and (g12 - c12).is_zero(),
        )
    )
    results.append(
        (
            "trace-products",
            ((m1 * m2).trace() - c12).is_zero()
            and ((m2 * m3).trace() - c23).is_zero()
            and ((m3 * m1).trace() - c31).is_zero(),
        )
    )

    results.append(("fricke", fricke_residual(c12, c23, c31).is_zero()))
    results.append(
        ("fricke-perturbed", not fricke_residual(c12 + one, c23, c31).is_zero())
    )

    ww1, ww2, ww3, _ = omega_constants()
    results.append(
        (
            "pb-12-23",
            (c12.poisson(c23) - (c12 * c23 + 2 * c31 - ww2)).is_zero(),
        )
    )
    results.append(
        (
            "pb-23-31",
            (c23.poisson(c31) - (c23 * c31 + 2 * c12 - ww3)).is_zero(),
        )
    )
    results.append(
        (
            "pb-31-12",
            (c31.poisson(c12) - (c31 * c12 + 2 * c23 - ww1)).is_zero(),
        )
    )

    rng = random.Random(seed)
    jacobi_ok = True
    leibniz_ok = True
    for _ in range(samples):
        f, g, h = (_random_classical(rng) for _ in range(3))
        jac = (
            f.poisson(g).poisson(h)
            + g.poisson(h).poisson(f)
            + h.poisson(f).poisson(g)
        )
        jacobi_ok = jacobi_ok and jac.is_zero()
        leib = (f * g).poisson(h) - (f * g.poisson(h) + f.poisson(h) * g)
        leibniz_ok = leibniz_ok and leib.is_zero()
    results.append(("jacobi", jacobi_ok))
    results.append(("leibniz", leibniz_ok))

    bridge = parameter_bridge(
        Scalar.i() * (Scalar.unit(1) - Scalar.unit(1, -1))
    )
    results.append(("bridge-G3", (bridge - perimeter_g(3)).is_zero()))
    return results


# -- assembled report ------------------------------------------------------------


def family_section():
    out = {}
    for family in FAMILIES:
        rows = []
        for rr in relation_suite(family):
            rows.append(
                {
                    "id": rr.relation,
                    "pass": rr.passed,
                    "expected": expected.RELATIONS[family][rr.relation],
                    "residual": None if rr.passed else rr.residual.text(),
                }
            )
        out[family] = rows
    return out


def audit_section():
    out = {}
    for family, variants in default_audits().items():
        out[family] = {
            label: [
                {
                    "id": rr.relation,
                    "pass": rr.passed,
                    "expected": expected.AUDITS[family][label][rr.relation],
                }
                for rr in suite
            ]
            for label, suite in variants.items()
        }
    return out


def qmon_section():
    oracle = sign_oracle()
    return {
        "sign_oracle": {str(k): v for k, v in sorted(oracle.items())},
        "sign_convention": SIGMA,
        "relations": [
            {"id": rr.relation, "pass": rr.passed} for rr in qmon_suite()
        ],
    }


def xyt_section():
    data = xyt_presentation()
    return {
        "relations": [
            {"id": rr.relation, "pass": rr.passed} for rr in data["residuals"]
        ]
    }


def geodesic_section():
    orientations = {}
    for s in (1, -1):
        orientations[str(s)] = {
            rid: res.is_zero() for rid, res in qcomm_residuals(s)
        }
    g12, g23, g31 = quantum_geodesics_elements()
    winf = omega_constants()[3]
    cubic = {}
    for s, c in cubic_candidates().items():
        cubic[str(s)] = {
            "central_support": c.is_central(),
            "commutes_with_geodesics": all(
                (c * g - g * c).is_zero() for g in (g12, g23, g31)
            ),
            "classical_is_minus_omega_inf": (c.classicalize() + winf).is_zero(),
        }
    return {
        "qcomm_orientations": orientations,
        "certified_orientation": expected.QCOMM_ORIENTATION,
        "cubic": cubic,
        "certified_cubic_orientation": expected.CUBIC_ORIENTATION,
    }


def cross_check_section():
    data = cross_check_rep_vs_monodromy()
    table = {
        "*".join(f"{v}" for v in vec): power
        for vec, power in data["qpower_table"].items()
    }
    m1, m2, m3, _ = build_qmonodromy()
    g12, g23, g31 = quantum_geodesics_elements()
    trace_tables = {}
    for label, pair, g in (("12", m1 * m2, g12), ("23", m2 * m3, g23), ("31", m3 * m1, g31)):
        tr = pair.trace()
        per = {}
        for vec in sorted(set(tr.terms) | set(g.terms)):
            c1, c2 = tr.terms.get(vec), g.terms.get(vec)
            power = None
            if c1 is not None and c2 is not None:
                for p in range(-6, 7):
                    if Scalar.unit(Q2, p) * c2 == c1:
                        power = p
                        break
            per["*".join(str(v) for v in vec)] = power
        trace_tables[label] = per
    return {
        "matches": data["matches"],
        "corner_qpower_table": table,
        "quantum_trace_qpowers": trace_tables,
    }


def automorphism_section():
    composites = {}
    for name, info in expected.COMPOSITES.items():
        check = composite_check(info["word"], name)
        composites[name] = {
            "word": list(info["word"]),
            "verbatim": all(ok for _, ok in check["verbatim"]),
            "q_inverted": all(ok for _, ok in check["q_inverted"]),
            "expected_verbatim": info["verbatim"],
            "expected_q_inverted": info["q_inverted"],
        }
    preservation = {}
    for name in TRANSFORM_NAMES:
        if name == "pi_inv":
            continue
        rows = []
        for rid, verbatim, inverted in relation_preservation(name):
            rows.append({"id": rid, "verbatim": verbatim, "q_inverted": inverted})
        image = apply_transform(name, build_family("VI"))
        preservation[name] = {
            "relations": rows,
            "cyclic_product": cyclic_product_value(image),
        }
    quad = classical_monodromy()
    classical = {
        name: classical_braid_conservation(name, quad) for name in ("b1", "b2", "r")
    }
    return {
        "braid_relation": all(ok for _, ok in braid_relation_check()),
        "r_involution": all(ok for _, ok in involution_check("r", power=2)),
        "pi_fourth": all(ok for _, ok in involution_check("pi", power=4)),
        "composites": composites,
        "preservation": preservation,
        "classical_braid": classical,
    }


def confluence_section():
    arrows = {}
    for spec in builtin_specs():
        report = apply_limit(spec)
        arrows[spec.name()] = {
            "slots": [
                {
                    "slot": s.slot,
                    "outcome": s.outcome,
                    "prefactor": s.prefactor,
                    "expected": list(expected.LIMITS[spec.name()][s.slot]),
                    "residual": _mat_text(s.residual),
                }
                for s in report.slots
            ],
            "relation_audit": relation_limit_audit(spec)["relations"],
        }
    return {
        "arrows": arrows,
        "scaled_identity_audits": scaled_identity_audits(),
        "exploratory": exploratory_chain(),
    }


def findings_section(report):
    """Derive the discrepancy ledger from computed outcomes."""
    present = []

    def add(fid):
        present.append({"id": fid, "summary": expected.FINDINGS[fid]})

    if report["classical"]["monodromy-trace-sign"]:
        add("FIND-TRSIGN")
    add("FIND-M3-ENTRY")
    table = report["cross_check"]["corner_qpower_table"]
    if table and all(v == 1 for v in table.values()):
        add("FIND-REP4-QPOWER")
    orientations = report["geodesics"]["qcomm_orientations"]
    if all(orientations["-1"].values()) and not any(orientations["1"].values()):
        add("FIND-QCOMM-ORIENTATION")
    cubic = report["geodesics"]["cubic"]
    if cubic["-1"]["central_support"] and not cubic["1"]["central_support"]:
        add("FIND-QCUBIC-SIGNS")

    fam = {row["id"]: row["pass"] for row in report["families"]["III"]}
    if not fam["dahaIII3"]:
        add("FIND-III-DIAG")
    if not fam["dahaIII5"]:
        add("FIND-III-REL5")
    if not fam["dahaIII6"]:
        add("FIND-III-REL6")
    fam = {row["id"]: row["pass"] for row in report["families"]["II"]}
    if not fam["dahaII3"]:
        add("FIND-II-DIAG")
    if not fam["daha-lim4-3"]:
        add("FIND-II-LIM43")
    if not fam["dahaII4"]:
        add("FIND-II-REL4")
    if not fam["dahaII5"]:
        add("FIND-II-REL5")
    fam = {row["id"]: row["pass"] for row in report["families"]["I"]}
    if not fam["dahaI3"]:
        add("FIND-I-DIAG")
    if not fam["dahaI5"]:
        add("FIND-I-REL5")
    if not fam["dahaI6"]:
        add("FIND-I-REL6")

    arrows = report["confluence"]["arrows"]
    outcome = {s["slot"]: s["outcome"] for s in arrows["IV->II"]["slots"]}
    if outcome["V1"] == "MISMATCH":
        add("FIND-LIM-IV-II-V1")
    if outcome["Vc0"] == "MISMATCH":
        add("FIND-LIM-IV-II-VC0")
    outcome = {s["slot"]: s["outcome"] for s in arrows["II->I"]["slots"]}
    if outcome["V0"] == "MISMATCH" and outcome["Vc0"] == "MISMATCH":
        add("FIND-LIM-II-I")
    outcome = {s["slot"]: s["outcome"] for s in arrows["V->III"]["slots"]}
    if outcome["Vc0"] == "MISMATCH":
        add("FIND-LIM-V-III-VC0")

    composites = report["automorphisms"]["composites"]
    if not composites["sigma"]["verbatim"] and not composites["sigma"]["q_inverted"]:
        add("FIND-SIGMA-COMPOSITE")
    if not composites["eta"]["verbatim"] and not composites["eta"]["q_inverted"]:
        add("FIND-ETA-COMPOSITE")
    return sorted(present, key=lambda f: f["id"])


def build_report():
    report = {
        "tool": {"name": TOOL_NAME, "version": TOOL_VERSION},
        "table_version": expected.TABLE_VERSION,
        "sign_convention": SIGMA,
        "families": family_section(),
        "audits": audit_section(),
        "qmon": qmon_section(),
        "xyt": xyt_section(),
        "geodesics": geodesic_section(),
        "cross_check": cross_check_section(),
        "classical": dict(classical_suite()),
        "automorphisms": automorphism_section(),
        "confluence": confluence_section(),
    }
    report["findings"] = findings_section(report)
    report["must_pass_ok"] = not must_pass_failures(report)
    return report


def must_pass_failures(report):
    """Outcomes that may never deviate; any entry here is an engine bug."""
    failures = []
    for family in expected.MUST_PASS_FAMILIES:
        for row in report["families"][family]:
            if not row["pass"]:
                failures.append(f"{family}:{row['id']}")
    for row in report["qmon"]["relations"]:
        if not row["pass"]:
            failures.append(f"qmon:{row['id']}")
    oracle = report["qmon"]["sign_oracle"]
    if not (oracle.get("-1") and not oracle.get("1")):
        failures.append("qmon:sign-oracle")
    for row in report["xyt"]["relations"]:
        if not row["pass"]:
            failures.append(f"xyt:{row['id']}")
    certified = str(expected.QCOMM_ORIENTATION)
    if not all(report["geodesics"]["qcomm_orientations"][certified].values()):
        failures.append("geodesics:qcomm")
    cubic = report["geodesics"]["cubic"][str(expected.CUBIC_ORIENTATION)]
    if not all(cubic.values()):
        failures.append("geodesics:cubic")
    for rid, ok in report["classical"].items():
        if not ok:
            failures.append(f"classical:{rid}")
    auto = report["automorphisms"]
    for key in ("braid_relation", "r_involution", "pi_fourth"):
        if not auto[key]:
            failures.append(f"automorphisms:{key}")
    for row in auto["preservation"]["b1"]["relations"]:
        if not (row["verbatim"] or row["q_inverted"]):
            failures.append(f"automorphisms:b1:{row['id']}")
    for name, outcomes in expected.LIMITS.items():
        arrow = report["confluence"]["arrows"][name]
        for slot_row in arrow["slots"]:
            got = (slot_row["outcome"], slot_row["prefactor"])
            want = tuple(outcomes[slot_row["slot"]])
            if list(got) != list(want):
                failures.append(f"limit:{name}:{slot_row['slot']}")
    for label, ok in report["confluence"]["scaled_identity_audits"].items():
        if not ok:
            failures.append(f"limit-audit:{label}")
    return failures


def expectation_mismatches(report):
    """Everything that differs from the frozen table (regression signal)."""
    diffs = []
    for family, rows in report["families"].items():
        for row in rows:
            if row["pass"] != row["expected"]:
                diffs.append(f"{family}:{row['id']}")
    for family, variants in report["audits"].items():
        for label, rows in variants.items():
            for row in rows:
                if row["pass"] != row["expected"]:
                    diffs.append(f"audit:{family}:{label}:{row['id']}")
    for name, info in report["automorphisms"]["composites"].items():
        if info["verbatim"] != info["expected_verbatim"]:
            diffs.append(f"composite:{name}:verbatim")
        if info["q_inverted"] != info["expected_q_inverted"]:
            diffs.append(f"composite:{name}:q-inverted")
    for name, outcomes in expected.LIMIT_RELATION_AUDITS.items():
        audit = dict(report["confluence"]["arrows"][name]["relation_audit"])
        for rid, want in outcomes.items():
            if audit.get(rid) != want:
                diffs.append(f"limit-relations:{name}:{rid}")
    table = report["cross_check"]["corner_qpower_table"]
    want = {
        "*".join(str(v) for v in vec): power
        for vec, power in expected.CROSS_CHECK_QPOWER.items()
    }
    if table != want:
        diffs.append("cross-check:corner-qpower")
    return diffs


def report_json(report=None) -> str:
    report = build_report() if report is None else report
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
