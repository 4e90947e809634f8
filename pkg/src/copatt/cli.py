"""copatt command line.

Exit codes: 0 ok, 1 verification failure, 2 usage or domain error,
3 resource cap, 4 input outside the bijection's domain.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import gallery
from .compositions import (enumerate_compositions, enumerate_compositions_with_parts,
                           enumerate_marked_kparts, enumerate_palindromes, format_composition,
                           format_marked, parse_marked)
from .counting import (c_w, count_occurrences_total, f_closed, omega_series,
                       palindrome_kpart_count, total_kparts)
from .errors import OutOfClassError, ResourceCapError
from .kparts import SPermutation, decode, decode_marked, encode_marked, enumerate_S
from .limits import check_cap
from .palindromes import (DownUpPermutation, MarkedPalindrome, enc1_forward, enc1_inverse,
                          enc2_forward, enc2_inverse, enumerate_downup,
                          enumerate_marked_palindromes)
from .patterns import SegmentedPattern, Spop, as_spop, count_occurrences
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP, EXIT_DOMAIN = 0, 1, 2, 3, 4


class VerificationFailed(Exception):
    pass


def emit(args, query, value, method, text=None, **extra):
    """Print a result as text, or as JSON with integers as decimal strings."""
    if args.json:
        doc = {"query": query, "value": str(value), "method": method}
        doc.update(extra)
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text if text is not None else value)


def load_pattern(args):
    if args.spop:
        with open(args.spop) as fh:
            return args.spop, Spop.from_json(fh.read())
    if args.pattern is None:
        raise ValueError("give --pattern or --spop")
    text = args.pattern.strip()
    if text.startswith("{"):
        return text, Spop.from_json(text)
    return text, as_spop(SegmentedPattern.parse(text))


def _enumerated_count(w, n, l, s):
    total = 0
    for c in enumerate_compositions(n):
        for rec in count_occurrences(c, w):
            if (l is None or rec.l == l) and (s is None or rec.s == s):
                total += 1
    return total


def cmd_count(args):
    label, w = load_pattern(args)
    n, l, s = args.n, args.l, args.s
    if n < 0 or (l is not None and l < 0) or (s is not None and s < 0):
        raise ValueError("n, l and s must be nonnegative")
    if l is None and s is None:
        value = count_occurrences_total(w, n)
    else:
        ls = [l] if l is not None else range(n + 1)
        ss = [s] if s is not None else range(n + 1)
        value = sum(c_w(w, n, a, b) for a in ls for b in ss)
    query = {"pattern": label, "n": n, "l": l, "s": s}
    if args.dump_series:
        print(omega_series(w, (n, n, n)).dump())
    if not args.oracle:
        emit(args, query, value, "series")
        return EXIT_OK
    check_cap(n)
    oracle = _enumerated_count(w, n, l, s)
    verdict = "agree" if oracle == value else "DISAGREE"
    emit(args, query, value, "series", text=f"{value} / {oracle} ({verdict})",
         oracle=str(oracle), agree=oracle == value)
    return EXIT_OK if oracle == value else EXIT_FAIL


def cmd_gf(args):
    label, w = load_pattern(args)
    caps = tuple(args.caps)
    series = omega_series(w, caps)
    if args.json:
        doc = {"query": {"pattern": label, "caps": list(caps)}, "method": "series",
               "terms": [[a, b, c, str(v)] for (a, b, c), v in series.terms()]}
        print(json.dumps(doc, sort_keys=True))
    else:
        dump = series.dump()
        if dump:
            print(dump)
    return EXIT_OK


def _kpart_table(n, k):
    rows = range(n + 1)
    cols = range(n + 1)
    return {(l, s): f_closed(n, k, l, s) for l in rows for s in cols}


def cmd_kparts(args):
    n, k, l, s = args.n, args.k, args.l, args.s
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"need n >= 1 and 1 <= k <= n, got n={n}, k={k}")
    query = {"n": n, "k": k, "l": l, "s": s}
    if args.table:
        table = _kpart_table(n, k)
        used_l = [a for a in range(n + 1) if any(table[a, b] for b in range(n + 1))] or [0]
        used_s = [b for b in range(n + 1) if any(table[a, b] for a in range(n + 1))] or [0]
        if args.json:
            doc = {"query": query, "method": "closed-form",
                   "table": {f"{a},{b}": str(table[a, b]) for a in used_l for b in used_s},
                   "value": str(sum(table.values()))}
            print(json.dumps(doc, sort_keys=True))
            return EXIT_OK
        print("l\\s " + " ".join(f"{b:>6}" for b in used_s) + "    sum")
        for a in used_l:
            row = [table[a, b] for b in used_s]
            print(f"{a:>3} " + " ".join(f"{v:>6}" for v in row) + f" {sum(row):>6}")
        col_sums = [sum(table[a, b] for a in used_l) for b in used_s]
        print("sum " + " ".join(f"{v:>6}" for v in col_sums) + f" {sum(col_sums):>6}")
        return EXIT_OK
    if l is None and s is None:
        value = 1 if k == n else total_kparts(n, k)
    else:
        ls = [l] if l is not None else range(n + 1)
        ss = [s] if s is not None else range(n + 1)
        value = sum(f_closed(n, k, a, b) for a in ls for b in ss)
    if args.oracle:
        check_cap(n)
        oracle = sum(1 for m in enumerate_marked_kparts(n, k)
                     if (l is None or m.l == l) and (s is None or m.s == s))
        verdict = "agree" if oracle == value else "DISAGREE"
        emit(args, query, value, "closed-form", text=f"{value} / {oracle} ({verdict})",
             oracle=str(oracle), agree=oracle == value)
        return EXIT_OK if oracle == value else EXIT_FAIL
    emit(args, query, value, "closed-form")
    return EXIT_OK


def cmd_palkparts(args):
    value = palindrome_kpart_count(args.N, args.k)
    query = {"N": args.N, "k": args.k}
    if args.oracle:
        check_cap(args.N, "N")
        oracle = sum(1 for _ in enumerate_marked_palindromes(args.N, args.k))
        verdict = "agree" if oracle == value else "DISAGREE"
        emit(args, query, value, "closed-form", text=f"{value} / {oracle} ({verdict})",
             oracle=str(oracle), agree=oracle == value)
        return EXIT_OK if oracle == value else EXIT_FAIL
    emit(args, query, value, "closed-form")
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise ValueError(f"this class needs {flag}")
    return value


def _class_items(args):
    name = args.family
    if name == "compositions":
        n = _need(args.n, "--n")
        if args.l is not None:
            return map(format_composition, enumerate_compositions_with_parts(n, args.l))
        return map(format_composition, enumerate_compositions(n))
    if name == "palindromes":
        return map(format_composition, enumerate_palindromes(_need(args.N, "--N")))
    if name == "marked":
        return map(format_marked, enumerate_marked_kparts(_need(args.n, "--n"), args.k))
    if name == "marked-palindromes":
        return map(str, enumerate_marked_palindromes(_need(args.N, "--N"), _need(args.k, "--k")))
    if name == "S":
        return map(str, enumerate_S(_need(args.n, "--n"), _need(args.k, "--k")))
    if name == "downup":
        m = _need(args.n, "--n")
        check_cap(m)
        return map(str, enumerate_downup(m))
    return map(gallery.canonical_text, gallery.enumerate_class(name, _need(args.n, "--n")))


def cmd_enumerate(args):
    items = list(_class_items(args))
    query = {"family": args.family, "n": args.n, "N": args.N, "k": args.k, "l": args.l}
    if args.json:
        doc = {"query": query, "value": str(len(items)), "method": "enumeration"}
        if not args.count:
            doc["items"] = items
        print(json.dumps(doc, sort_keys=True))
    elif args.count:
        print(len(items))
    else:
        for item in items:
            print(item)
    return EXIT_OK


def _perm(text):
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError(f"cannot parse permutation {text!r}") from None


def _bijection(name, direction, payload, args):
    """Returns (image, inverse_of_image, canonical_input)."""
    forward = direction in ("encode", "forward")
    if name == "kpart":
        if forward:
            m = parse_marked(payload)
            p = encode_marked(m)
            return str(p), format_marked(decode_marked(p, m.k)), format_marked(m)
        p = SPermutation.parse(payload)
        if args.k is None and args.n is None:
            raise ValueError("kpart decode needs --k or --n")
        m = decode(p, n=args.n, k=args.k).to_marked()
        return format_marked(m), str(encode_marked(m)), str(p)
    if name in ("pal1", "pal2"):
        enc, dec = (enc1_forward, enc1_inverse) if name == "pal1" else (enc2_forward, enc2_inverse)
        if forward:
            mp = MarkedPalindrome.from_marked(parse_marked(payload))
            p = enc(mp)
            return str(p), str(dec(p, mp.k, mp.N)), str(mp)
        p = DownUpPermutation.parse(payload)
        mp = dec(p, _need(args.k, "--k"), args.N)
        return str(mp), str(enc(mp)), str(p)
    canon = gallery.canonical_text
    if name in ("s1", "s2"):
        fwd, back = (gallery.s1_forward, gallery.s1_backward) if name == "s1" else \
            (gallery.s2_forward, gallery.s2_backward)
        if forward:
            p = _perm(payload)
            b = fwd(p)
            return str(b), canon(back(b)), canon(p)
        bits = payload.strip()
        p = back(bits)
        return canon(p), str(fwd(p)), bits
    if name == "s3":
        if forward:
            a = gallery.OneDescentAvoider(_perm(payload))
            q = gallery.s3_forward(a)
            return canon(q), str(gallery.s3_backward(q)), str(a)
        q = _perm(payload)
        a = gallery.s3_backward(q)
        return str(a), canon(gallery.s3_forward(a)), canon(q)
    if name == "s4":
        if forward:
            lp = gallery.LinePair.parse(payload, _need(args.n, "--n"))
            q = gallery.s4_forward(lp)
            return canon(q), str(gallery.s4_backward(q)), str(lp)
        q = _perm(payload)
        lp = gallery.s4_backward(q)
        return str(lp), canon(gallery.s4_forward(lp)), canon(q)
    raise ValueError(f"unknown bijection {name!r}")


def cmd_bijection(args):
    image, back, canonical = _bijection(args.name, args.direction, args.payload, args)
    query = {"name": args.name, "direction": args.direction, "input": canonical}
    if args.check and back != canonical:
        raise VerificationFailed(f"round trip failed: {canonical} -> {image} -> {back}")
    emit(args, query, image, "bijection", roundtrip=back == canonical if args.check else None)
    return EXIT_OK


def cmd_verify(args):
    report = run_suite(args.suite, args.max_n, args.jobs)
    if args.json:
        print(json.dumps(report.as_dict(args.verbose), sort_keys=True))
    else:
        for line in report.lines(args.verbose):
            print(line)
        print("all checks passed" if report.passed else "verification FAILED")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="copatt", description="Pattern counts in integer compositions and their bijections.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    def pattern_args(p):
        p.add_argument("--pattern", help="segmented pattern such as 112, or a SPOP as inline JSON")
        p.add_argument("--spop", metavar="FILE", help="SPOP JSON file (elements, less, word)")

    p = add("count", cmd_count, "count pattern occurrences")
    pattern_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, help="parts outside the occurrence")
    p.add_argument("--s", type=int, help="sum of parts before the occurrence")
    p.add_argument("--oracle", action="store_true", help="also count by brute force")
    p.add_argument("--dump-series", action="store_true",
                   help="print the trivariate series up to (n, n, n) first")

    p = add("gf", cmd_gf, "dump the trivariate occurrence series")
    pattern_args(p)
    p.add_argument("--caps", type=int, nargs=3, default=(8, 8, 8), metavar=("X", "Y", "Z"))

    p = add("kparts", cmd_kparts, "k-parts among compositions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, help="number of other parts")
    p.add_argument("--s", type=int, help="sum of parts before the k-part")
    p.add_argument("--table", action="store_true", help="print the full (l, s) table")
    p.add_argument("--oracle", action="store_true", help="also count by brute force")

    p = add("palkparts", cmd_palkparts, "odd k-parts among palindromes of even N")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also count by brute force")

    p = add("enumerate", cmd_enumerate, "list a combinatorial class")
    p.add_argument("family", choices=["compositions", "palindromes", "marked",
                                      "marked-palindromes", "S", "downup", *gallery.CLASS_NAMES])
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--count", action="store_true", help="print only the number of items")

    p = add("bijection", cmd_bijection, "apply one of the encodings")
    p.add_argument("name", choices=["kpart", "pal1", "pal2", "s1", "s2", "s3", "s4"])
    p.add_argument("direction", choices=["encode", "decode", "forward", "backward"])
    p.add_argument("payload")
    p.add_argument("--n", type=int, help="composition weight (kpart decode) or line count (s4)")
    p.add_argument("--N", type=int, help="palindrome weight (pal decode)")
    p.add_argument("--k", type=int, help="value of the marked part (decode)")
    p.add_argument("--check", action="store_true", help="round-trip and compare")

    p = add("verify", cmd_verify, "run the brute-force verification suite")
    p.add_argument("--suite", default="all", choices=sorted(SUITES))
    p.add_argument("--max-n", type=int, help="size bound replacing each check's default")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verbose", action="store_true", help="show timings")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OutOfClassError as exc:
        print(f"error: input outside the domain: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
