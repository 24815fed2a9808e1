"""
Command-line front end.

Exit status: 0 success (or "yes"/"equal"), 1 a mathematical negative ("no",
"distinct", failed certificate), 2 usage or parse error, 3 budget exhausted or
undecided. The default search budget comes from BRAIDCOSET_BUDGET.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .artin import artin, artin_mirrored, final_counterexample_check, format_free
from .burau import GLCoset, eta, star_t
from .cosets import (AssociativityCertificate, BraidCoset, CertificateError, EqualityCertificate,
                     associativity_certificate, coset_equal, naive_counterexample,
                     product_threshold, product_word, replay_transcript, step3_certificate)
from .garside import braid_equal, conjugate_test, normal_form, simple_word
from .render import render
from .symmetric import SymCoset, canonical_invariant, perm_of, sym_product
from .words import BraidWord, WordSyntaxError, format_word, parse_word, support_upper, theta

OK, NO, USAGE, UNKNOWN = 0, 1, 2, 3
BUDGET_ENV = "BRAIDCOSET_BUDGET"
DEFAULT_BUDGET = 100_000


class UsageError(Exception):
    pass


def _word(text: str, label: str) -> BraidWord:
    try:
        return parse_word(text)
    except WordSyntaxError as exc:
        raise UsageError(f"{label}: {exc}\n  {text}\n  {' ' * exc.position}^") from exc


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _pos(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        v = int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV}={raw!r} is not an integer") from None
    if v < 1:
        raise UsageError(f"{BUDGET_ENV} must be positive")
    return v


class _Out:
    def __init__(self, as_json: bool, stream):
        self.as_json = as_json
        self.stream = stream

    def emit(self, text_lines: Sequence[str], data: dict) -> None:
        if self.as_json:
            self.stream.write(json.dumps(data, sort_keys=True) + "\n")
        else:
            for line in text_lines:
                self.stream.write(line + "\n")


# ---------------------------------------------------------------- commands

def cmd_nf(a, out: _Out) -> int:
    w = _word(a.word, "word")
    n = a.strands or max(support_upper(w) + 1, 2)
    if n <= support_upper(w):
        raise UsageError(f"the word needs at least {support_upper(w) + 1} strands")
    nf = normal_form(w, n)
    factors = [format_word(BraidWord(tuple(simple_word(p)))) for p in nf.factors]
    word = format_word(nf.to_word())
    out.emit([f"Delta^{nf.inf} | " + " | ".join(factors) if factors else f"Delta^{nf.inf}",
              word],
             {"strands": n, "inf": nf.inf, "factors": factors, "word": word})
    return OK


def cmd_eq(a, out: _Out) -> int:
    u, v = _word(a.u, "first word"), _word(a.v, "second word")
    if a.alpha is None and a.gamma is None:
        same = braid_equal(u, v)
        out.emit(["equal" if same else "not equal"], {"equal": same})
        return OK if same else NO
    alpha, gamma = a.alpha or 0, a.gamma or 0
    verdict = coset_equal(BraidCoset(alpha, gamma, u), BraidCoset(alpha, gamma, v),
                          budget=a.budget, length_cap=a.length_cap)
    lines = [verdict.answer]
    data = {"answer": verdict.answer, "explored": verdict.explored}
    if verdict.certificate is not None:
        lines.append(verdict.certificate.to_line())
        data["certificate"] = verdict.certificate.to_line()
    if verdict.invariant is not None:
        lines.append(verdict.invariant)
        data["invariant"] = verdict.invariant
    out.emit(lines, data)
    return {"equal": OK, "distinct": NO}.get(verdict.answer, UNKNOWN)


def cmd_conj(a, out: _Out) -> int:
    u, v = _word(a.u, "first word"), _word(a.v, "second word")
    res = conjugate_test(u, v, budget=a.budget)
    lines = [res.answer]
    data = {"answer": res.answer, "explored": res.explored}
    if res.witness is not None:
        lines.append("conjugator: " + format_word(res.witness))
        data["conjugator"] = format_word(res.witness)
    out.emit(lines, data)
    return {"yes": OK, "no": NO}.get(res.answer, UNKNOWN)


def cmd_theta(a, out: _Out) -> int:
    w = theta(a.n, a.beta)
    out.emit([format_word(w)], {"n": a.n, "beta": a.beta, "word": format_word(w)})
    return OK


def cmd_product(a, out: _Out) -> int:
    p, q = _word(a.p, "left word"), _word(a.q, "right word")
    P, Q = BraidCoset(a.alpha, a.beta, p), BraidCoset(a.beta, a.gamma, q)
    n0 = product_threshold(P, Q)
    n = n0 if a.n is None else a.n
    if n < n0:
        raise UsageError(f"n = {n} is below the stable range (n0 = {n0})")
    w = product_word(p, q, a.beta, n)
    out.emit([format_word(w), f"n = {n}"],
             {"alpha": a.alpha, "beta": a.beta, "gamma": a.gamma, "n": n, "n0": n0,
              "word": format_word(w)})
    return OK


def cmd_burau(a, out: _Out) -> int:
    m = eta(_word(a.word, "word"))
    if out.as_json:
        out.stream.write(json.dumps(m.to_json()) + "\n")
    else:
        out.stream.write(str(m) + "\n")
    return OK


def cmd_star(a, out: _Out) -> int:
    p, q = eta(_word(a.p, "left word")), eta(_word(a.q, "right word"))
    res = star_t(GLCoset(a.n, a.k, p), GLCoset(a.k, a.m, q))
    if out.as_json:
        out.stream.write(json.dumps(res.rep.to_json()) + "\n")
    else:
        out.stream.write(str(res.rep) + "\n")
    return OK


def cmd_sym(a, out: _Out) -> int:
    p, q = _word(a.p, "left word"), _word(a.q, "right word")
    P = SymCoset(a.alpha, a.beta, perm_of(p))
    Q = SymCoset(a.beta, a.gamma, perm_of(q))
    r = sym_product(P, Q)
    inv = canonical_invariant(r.perm, a.alpha, a.gamma)
    out.emit([str(r.perm), f"invariant {inv}"],
             {"perm": str(r.perm), "invariant": [list(x) for x in inv.pairs]})
    return OK


def cmd_artin(a, out: _Out) -> int:
    if a.final:
        rep = final_counterexample_check(N=a.final, radius=a.radius)
        out.emit(rep.lines(), {"status": rep.status, "searched": rep.searched,
                               "same_double_coset": rep.same_double_coset})
        if rep.same_double_coset is None:
            return UNKNOWN
        return OK
    if a.word is None:
        raise UsageError("artin needs a word or --final N")
    w = _word(a.word, "word")
    e = artin_mirrored(w) if a.mirrored else artin(w)
    out.emit(e.lines() or ["identity"],
             {"images": {str(i): format_free(e.images[i]) for i in sorted(e.images)}})
    return OK


def _assoc_lines(cert: AssociativityCertificate) -> list[str]:
    lines = ["# (ab)c reduced to the common word"]
    lines += [s.to_line() for s in cert.steps_left]
    lines += ["# a(bc) reduced to the common word"]
    lines += [s.to_line() for s in cert.steps_right]
    lines += ["# chained", cert.left.to_line(), cert.right.to_line()]
    return lines


def cmd_certify(a, out: _Out) -> int:
    if a.emit is not None:
        if a.emit == "assoc-example":
            cert = associativity_certificate(parse_word("s2^-1 s1^-1"), parse_word("s1 s1"),
                                             parse_word("s1 s1 s2 s2"), 3, 1, 2, 3)
            lines = _assoc_lines(cert)
        elif a.emit == "remark15":
            rep = naive_counterexample()
            lines = ["# " + line for line in rep.lines()[1:]]
            lines.append(rep.same_coset_certificate.to_line())
        else:
            u, ell = step3_certificate(a.m, a.beta)
            mb = a.m + a.beta
            c = EqualityCertificate(u, ell, theta(a.m + 1, a.beta), theta(a.m, a.beta), mb, mb,
                                    note="step 3")
            lines = [c.to_line()]
        out.emit(lines, {"transcript": "\n".join(lines) + "\n"})
        return OK
    if a.file is None:
        raise UsageError("certify needs a transcript FILE or --emit")
    try:
        with open(a.file, encoding="utf-8") if a.file != "-" else sys.stdin as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    try:
        certs = replay_transcript(text)
    except CertificateError as exc:
        out.emit([f"rejected: {exc}"], {"verified": False, "error": str(exc)})
        return NO
    except WordSyntaxError as exc:
        raise UsageError(str(exc)) from exc
    out.emit([f"verified {len(certs)} certificates"], {"verified": True, "count": len(certs)})
    return OK


def cmd_render(a, out: _Out) -> int:
    w = _word(a.word, "word")
    text = render(w, a.strands)
    if out.as_json:
        out.stream.write(json.dumps({"word": format_word(w), "diagram": text}) + "\n")
    else:
        out.stream.write(text)
    return OK


# ---------------------------------------------------------------- parser

def build_parser(budget: int) -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="braidcoset", description="Double cosets of braid groups.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="Garside left normal form")
    p.add_argument("word")
    p.add_argument("--strands", type=_pos)
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("eq", help="braid equality, or double-coset equality with --alpha/--gamma")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--alpha", type=_nonneg)
    p.add_argument("--gamma", type=_nonneg)
    p.add_argument("--budget", type=_pos, default=budget)
    p.add_argument("--length-cap", type=_pos, default=6)
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("conj", help="conjugacy test with witness")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--budget", type=_pos, default=budget)
    p.set_defaults(func=cmd_conj)

    p = sub.add_parser("theta", help="the block-crossing braid theta_n[beta]")
    p.add_argument("n", type=_pos)
    p.add_argument("beta", type=_nonneg)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("product", help="double-coset product representative")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--alpha", type=_nonneg, required=True)
    p.add_argument("--beta", type=_nonneg, required=True)
    p.add_argument("--gamma", type=_nonneg, required=True)
    p.add_argument("--n", type=_pos)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("burau", help="Burau matrix of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_burau)

    p = sub.add_parser("star", help="one-parameter product of Burau images")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("sym", help="symmetric-group product of endpoint permutations")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--alpha", type=_nonneg, required=True)
    p.add_argument("--beta", type=_nonneg, required=True)
    p.add_argument("--gamma", type=_nonneg, required=True)
    p.set_defaults(func=cmd_sym)

    p = sub.add_parser("artin", help="Artin action on the free group")
    p.add_argument("word", nargs="?")
    p.add_argument("--mirrored", action="store_true", help="conjugate by inverting every x_i")
    p.add_argument("--final", type=_pos, metavar="N", help="run the two-automorphism comparison")
    p.add_argument("--radius", type=_pos, default=3)
    p.set_defaults(func=cmd_artin)

    p = sub.add_parser("certify", help="replay or emit certificate transcripts")
    p.add_argument("file", nargs="?")
    p.add_argument("--emit", choices=["assoc-example", "remark15", "step3"])
    p.add_argument("--m", type=_pos, default=2)
    p.add_argument("--beta", type=_nonneg, default=1)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("render", help="ASCII braid diagram")
    p.add_argument("word")
    p.add_argument("--strands", type=_pos)
    p.set_defaults(func=cmd_render)
    return ap


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        budget = _default_budget()
        ap = build_parser(budget)
        try:
            args = ap.parse_args(argv)
        except SystemExit as exc:
            return USAGE if exc.code else OK
        return args.func(args, _Out(args.json, stdout))
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return USAGE
    except ValueError as exc:
        stderr.write(f"error: {exc}\n")
        return USAGE


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "build_parser", "OK", "NO", "USAGE", "UNKNOWN", "BUDGET_ENV"]
