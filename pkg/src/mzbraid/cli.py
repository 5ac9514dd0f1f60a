"""Command-line interface.

Subcommands: gate (braid word -> matrix JSON), verify (self-check suites),
synth (target gate -> braid word), transform (re-express a gate set under
a new pairing), enumerate (write the full braid-image index to a file).

Output is deterministic byte for byte: floats print with 17 significant
digits (round-trip safe), ordering is fixed, and randomised suites use a
hard-coded seed.  Exit codes: 0 success, 1 verification failure, 2 usage
or validation errors, 3 synthesis input errors.
"""

import argparse
import json
import sys

import numpy as np

from .braid import (
    BraidWord,
    generator_unitary,
    verify_braid_relations,
    word_unitary,
)
from .encoding import (
    canonicalize_phase,
    parity_sector_indices,
    phase_distance,
    sector_block,
)
from .fock import PairingDefinition, gamma_matrix
from .gates import closed_form, named_gate
from .synthesis import (
    DEFAULT_ELEMENT_CAP,
    GroupIndex,
    NotRepresentable,
    canonical_key,
    enumerate_image,
    synthesize,
)
from .transform import generator_gateset, repairing_braid, transform_gateset

INDEX_FORMAT = "mzbraid-index/1"
_PARITY_SUITE_SEED = 20240817


class UsageError(ValueError):
    """Bad arguments or inputs; mapped to exit code 2."""


class SynthInputError(ValueError):
    """Bad synthesis target or index; mapped to exit code 3."""


def _fmt_float(value: float) -> str:
    value = float(value)
    if value == 0.0:
        value = 0.0  # normalise -0.0
    return format(value, ".17g")


def _entries_json(matrix: np.ndarray) -> str:
    parts = [
        f"[{_fmt_float(v.real)},{_fmt_float(v.imag)}]" for v in matrix.ravel()
    ]
    return "[" + ",".join(parts) + "]"


def matrix_to_json(matrix: np.ndarray, metadata: dict) -> str:
    """Serialise a matrix document (dim, row-major [re, im] pairs, metadata)."""
    matrix = np.asarray(matrix, dtype=complex)
    meta = json.dumps(metadata, sort_keys=True, separators=(",", ":"))
    return (
        f'{{"dim":{matrix.shape[0]},'
        f'"entries":{_entries_json(matrix)},'
        f'"metadata":{meta}}}'
    )


def parse_matrix_json(text: str) -> tuple[np.ndarray, dict]:
    """Parse a matrix document produced by :func:`matrix_to_json`."""
    doc = json.loads(text)
    dim = doc["dim"]
    entries = doc["entries"]
    if not isinstance(dim, int) or dim < 1 or len(entries) != dim * dim:
        raise ValueError("matrix document has inconsistent dim/entries")
    values = [complex(re, im) for re, im in entries]
    matrix = np.array(values, dtype=complex).reshape(dim, dim)
    return matrix, doc.get("metadata", {})


def parse_word(text: str, mf_count: int) -> BraidWord:
    """Parse a comma-separated braid word; the empty string is the identity."""
    text = text.strip()
    if not text:
        return BraidWord((), mf_count)
    try:
        letters = tuple(int(tok.strip()) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse braid word {text!r}") from None
    try:
        return BraidWord(letters, mf_count)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_pairing(text: str) -> PairingDefinition:
    """Parse a pairing like ``"1,2;3,4"`` (pairs separated by semicolons)."""
    try:
        pairs = []
        for chunk in text.strip().split(";"):
            a, b = (int(tok.strip()) for tok in chunk.split(","))
            pairs.append((a, b))
        return PairingDefinition(tuple(pairs))
    except ValueError as exc:
        raise UsageError(f"cannot parse pairing {text!r}: {exc}") from None


def _check_mf(mf: int, allowed: tuple[int, ...] | None = None) -> None:
    if allowed is not None:
        if mf not in allowed:
            raise UsageError(f"--mf must be one of {allowed}, got {mf}")
        return
    if mf % 2 != 0 or not 2 <= mf <= 12:
        raise UsageError(f"--mf must be an even count in 2..12, got {mf}")


def write_group_index(index: GroupIndex, path: str) -> None:
    elements = []
    for key, word in sorted(
        index.table.items(), key=lambda kv: (len(kv[1]), kv[1])
    ):
        matrix = index.matrices[key]
        entries = [[float(v.real), float(v.imag)] for v in matrix.ravel()]
        elements.append({"word": list(word), "matrix": entries})
    doc = {
        "format": INDEX_FORMAT,
        "mf_count": index.mf_count,
        "encoding": index.encoding,
        "orientation": index.orientation,
        "dim": index.dim,
        "order": index.order,
        "key_decimals": 8,
        "elements": elements,
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(doc, handle, sort_keys=True, separators=(",", ":"))
        handle.write("\n")


def read_group_index(path: str) -> GroupIndex:
    with open(path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    if doc.get("format") != INDEX_FORMAT:
        raise ValueError(f"not a group-index file: {path}")
    dim = doc["dim"]
    table: dict[bytes, tuple[int, ...]] = {}
    matrices: dict[bytes, np.ndarray] = {}
    for element in doc["elements"]:
        values = [complex(re, im) for re, im in element["matrix"]]
        matrix = np.array(values, dtype=complex).reshape(dim, dim)
        key = canonical_key(matrix)
        table[key] = tuple(element["word"])
        matrices[key] = matrix
    return GroupIndex(
        mf_count=doc["mf_count"],
        encoding=doc["encoding"],
        orientation=doc["orientation"],
        dim=dim,
        table=table,
        matrices=matrices,
    )


def cmd_gate(args: argparse.Namespace) -> int:
    _check_mf(args.mf)
    defn = (
        parse_pairing(args.definition)
        if args.definition
        else PairingDefinition.adjacent(args.mf // 2)
    )
    if defn.mf_count != args.mf:
        raise UsageError(
            f"definition pairs {defn.mf_count} Majoranas but --mf is {args.mf}"
        )
    word = parse_word(args.word, args.mf)
    matrix = word_unitary(defn, word, args.orientation)
    encoding = "sparse"
    if args.dense:
        matrix = sector_block(matrix, defn.modes, "even")
        encoding = "dense"
    phase_removed = None
    if args.canonical:
        matrix, phase = canonicalize_phase(matrix)
        phase_removed = [float(phase.real), float(phase.imag)]
    metadata = {
        "mf_count": args.mf,
        "encoding": encoding,
        "orientation": args.orientation,
        "definition": [list(pair) for pair in defn.pairs],
        "global_phase_removed": phase_removed,
    }
    print(matrix_to_json(matrix, metadata))
    return 0


def _suite_anticommutation(defn: PairingDefinition) -> float:
    dim = 2 ** defn.modes
    identity = np.eye(dim)
    gammas = [gamma_matrix(defn, i) for i in range(1, defn.mf_count + 1)]
    worst = 0.0
    for i, gi in enumerate(gammas):
        worst = max(worst, float(np.max(np.abs(gi - gi.conj().T))))
        worst = max(worst, float(np.max(np.abs(gi @ gi - identity))))
        for gj in gammas[i + 1 :]:
            worst = max(worst, float(np.max(np.abs(gi @ gj + gj @ gi))))
    return worst


def _suite_braid_relations(defn: PairingDefinition) -> float:
    return verify_braid_relations(defn).max_deviation


def _suite_parity_blocks(defn: PairingDefinition) -> float:
    rng = np.random.default_rng(_PARITY_SUITE_SEED)
    even, odd = parity_sector_indices(defn)
    letters = defn.mf_count - 1
    worst = 0.0
    for _ in range(50):
        length = int(rng.integers(1, 13))
        raw = rng.integers(1, letters + 1, size=length)
        signs = rng.choice((-1, 1), size=length)
        word = BraidWord(tuple(int(l * s) for l, s in zip(raw, signs)), defn.mf_count)
        unitary = word_unitary(defn, word)
        cross = max(
            float(np.max(np.abs(unitary[np.ix_(even, odd)]))),
            float(np.max(np.abs(unitary[np.ix_(odd, even)]))),
        )
        worst = max(worst, cross)
    return worst


def _suite_closed_forms(defn: PairingDefinition) -> float:
    n = defn.mf_count - 2
    worst = 0.0
    for i in range(1, n + 2):
        reference = closed_form(n, i)
        reduced = sector_block(generator_unitary(defn, i), defn.modes, "even")
        dev = min(
            phase_distance(reduced, reference),
            phase_distance(reduced, reference.conj().T),
        )
        worst = max(worst, dev)
    return worst


_SUITES = (
    ("anticommutation", _suite_anticommutation, 1e-12),
    ("braid-relations", _suite_braid_relations, 1e-12),
    ("parity-blocks", _suite_parity_blocks, 1e-14),
    ("closed-forms", _suite_closed_forms, 1e-10),
)


def cmd_verify(args: argparse.Namespace) -> int:
    _check_mf(args.mf)
    names = [name for name, _, _ in _SUITES]
    if args.suite != "all" and args.suite not in names:
        raise UsageError(f"--suite must be 'all' or one of {names}")
    defn = PairingDefinition.adjacent(args.mf // 2)
    overall = True
    for name, runner, tolerance in _SUITES:
        if args.suite != "all" and args.suite != name:
            continue
        if name == "closed-forms" and args.mf < 4:
            print(f"{name}: SKIP (needs at least 4 Majoranas)")
            continue
        if name == "braid-relations" and args.mf < 4:
            print(f"{name}: SKIP (single generator, nothing to relate)")
            continue
        deviation = runner(defn)
        passed = deviation <= tolerance
        overall = overall and passed
        status = "PASS" if passed else "FAIL"
        print(
            f"{name}: {status} max_deviation={deviation:.3e} "
            f"tolerance={tolerance:.0e}"
        )
    print(f"overall: {'PASS' if overall else 'FAIL'}")
    return 0 if overall else 1


def _load_target(source: str, dim: int) -> np.ndarray:
    if source.startswith("@"):
        try:
            with open(source[1:], "r", encoding="utf-8") as handle:
                matrix, _ = parse_matrix_json(handle.read())
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise SynthInputError(f"cannot read target file: {exc}") from None
    else:
        try:
            matrix = named_gate(source)
        except ValueError as exc:
            raise SynthInputError(str(exc)) from None
    if matrix.shape != (dim, dim):
        raise SynthInputError(
            f"target is {matrix.shape[0]}x{matrix.shape[1]} but the index "
            f"is {dim}x{dim}"
        )
    return matrix


def cmd_synth(args: argparse.Namespace) -> int:
    _check_mf(args.mf, allowed=(4, 6, 8))
    if args.index:
        try:
            index = read_group_index(args.index)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise SynthInputError(f"cannot read index file: {exc}") from None
        if (
            index.mf_count != args.mf
            or index.encoding != args.encoding
            or index.orientation != args.orientation
        ):
            raise SynthInputError(
                "index file does not match the requested mf/encoding/orientation"
            )
    else:
        index = enumerate_image(args.mf, args.encoding, args.orientation)
    target = _load_target(args.target, index.dim)
    try:
        result = synthesize(target, index)
    except ValueError as exc:
        raise SynthInputError(str(exc)) from None
    if isinstance(result, NotRepresentable):
        print("NOT_REPRESENTABLE")
    else:
        print(",".join(str(l) for l in result.letters))
    return 0


def _parse_gateset_file(path: str, defn: PairingDefinition, dense: bool):
    with open(path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    gates = []
    for item in doc["gates"]:
        values = [complex(re, im) for re, im in item["entries"]]
        dim = item["dim"]
        gates.append((item["label"], np.array(values).reshape(dim, dim)))
    from .transform import GateSet

    return GateSet(
        definition=defn,
        gates=tuple(gates),
        encoding="dense" if dense else "sparse",
    )


def cmd_transform(args: argparse.Namespace) -> int:
    to_def = parse_pairing(args.to)
    from_def = (
        parse_pairing(args.from_def)
        if args.from_def
        else PairingDefinition.adjacent(to_def.modes)
    )
    if from_def.mf_count != to_def.mf_count:
        raise UsageError("--from and --to pair different Majorana counts")
    if from_def.mf_count > 12:
        raise UsageError("transform supports at most 12 Majoranas")
    if args.gates == "generators":
        gateset = generator_gateset(
            from_def, args.orientation, "dense" if args.dense else "sparse"
        )
    elif args.gates.startswith("@"):
        try:
            gateset = _parse_gateset_file(args.gates[1:], from_def, args.dense)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read gate-set file: {exc}") from None
    else:
        raise UsageError("--gates must be 'generators' or '@file.json'")
    word = repairing_braid(from_def, to_def)
    transformed = transform_gateset(
        gateset, word, args.orientation, args.side, new_definition=to_def
    )
    gate_parts = []
    for label, matrix in transformed.gates:
        gate_parts.append(
            f'{{"label":{json.dumps(label)},"dim":{matrix.shape[0]},'
            f'"entries":{_entries_json(matrix)}}}'
        )
    compact = {"separators": (",", ":")}
    doc = (
        f'{{"from":{json.dumps([list(p) for p in from_def.pairs], **compact)},'
        f'"to":{json.dumps([list(p) for p in to_def.pairs], **compact)},'
        f'"word":{json.dumps(list(word.letters), **compact)},'
        f'"orientation":{args.orientation},'
        f'"side":{json.dumps(args.side)},'
        f'"encoding":{json.dumps(transformed.encoding)},'
        f'"gates":[{",".join(gate_parts)}]}}'
    )
    print(doc)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    _check_mf(args.mf, allowed=(4, 6, 8))
    index = enumerate_image(args.mf, args.encoding, args.orientation, cap=args.cap)
    write_group_index(index, args.out)
    longest = max((len(w) for w in index.table.values()), default=0)
    print(
        f"mf={index.mf_count} encoding={index.encoding} "
        f"orientation={index.orientation:+d} order={index.order} "
        f"max_word_length={longest}"
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzbraid",
        description="Braid-gate calculus for Majorana zero-mode qubits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gate = sub.add_parser("gate", help="compute the unitary of a braid word")
    gate.add_argument("--word", required=True, help="comma-separated letters; '' = identity")
    gate.add_argument("--mf", type=int, required=True, help="number of Majoranas")
    gate.add_argument("--definition", default=None, help="pairing, e.g. '1,2;3,4'")
    gate.add_argument("--orientation", type=int, default=1, choices=(1, -1))
    gate.add_argument("--dense", action="store_true", help="reduce to the even block")
    gate.add_argument("--canonical", action="store_true", help="remove global phase")
    gate.set_defaults(func=cmd_gate)

    verify = sub.add_parser("verify", help="run self-check suites")
    verify.add_argument("--mf", type=int, required=True)
    verify.add_argument("--suite", default="all")
    verify.set_defaults(func=cmd_verify)

    synth = sub.add_parser("synth", help="find a braid word for a target gate")
    synth.add_argument("--target", required=True, help="gate name or @matrix.json")
    synth.add_argument("--mf", type=int, required=True)
    synth.add_argument("--encoding", default="dense", choices=("dense", "sparse"))
    synth.add_argument("--orientation", type=int, default=1, choices=(1, -1))
    synth.add_argument("--index", default=None, help="pre-built index file")
    synth.set_defaults(func=cmd_synth)

    transform = sub.add_parser(
        "transform", help="re-express a gate set under a new pairing"
    )
    transform.add_argument("--to", required=True, help="target pairing")
    transform.add_argument(
        "--from", dest="from_def", default=None, help="source pairing (default adjacent)"
    )
    transform.add_argument("--gates", default="generators")
    transform.add_argument("--orientation", type=int, default=1, choices=(1, -1))
    transform.add_argument("--side", default="left", choices=("left", "right"))
    transform.add_argument("--dense", action="store_true")
    transform.set_defaults(func=cmd_transform)

    enum = sub.add_parser("enumerate", help="write the full braid image to a file")
    enum.add_argument("--mf", type=int, required=True)
    enum.add_argument("--encoding", default="dense", choices=("dense", "sparse"))
    enum.add_argument("--orientation", type=int, default=1, choices=(1, -1))
    enum.add_argument("--out", required=True)
    enum.add_argument("--cap", type=int, default=DEFAULT_ELEMENT_CAP)
    enum.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SynthInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
