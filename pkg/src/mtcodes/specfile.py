"""Read and write the sectioned text format for code specifications.

A spec file has a ``[field]`` section (p, degree, modulus), a ``[blocks]``
section (lengths, shifts) and one ``[[generator]]`` section per module
generator. The syntax is a TOML subset, so the stdlib parser does the
lexing; this module adds the semantic layer and turns every problem into
a SpecFileError naming the offending section and key.
"""

from __future__ import annotations

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .errors import SpecFileError
from .galois import FieldSpec
from .mt import MTSpec
from .polyring import Poly


def _require(table: dict, section: str, key: str):
    if key not in table:
        raise SpecFileError(f"[{section}] is missing required key '{key}'")
    return table[key]


def _int_list(value, section: str, key: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) for v in value):
        raise SpecFileError(f"[{section}] key '{key}' must be a list of integers")
    return value


def _str_list(value, section: str, key: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise SpecFileError(f"[{section}] key '{key}' must be a list of strings")
    return value


def _check_keys(table: dict, section: str, allowed: set[str]) -> None:
    extra = sorted(set(table) - allowed)
    if extra:
        raise SpecFileError(f"[{section}] has unknown keys: {', '.join(extra)}")


def parse_spec(text: str) -> MTSpec:
    """Parse spec-file text into an MTSpec.

    Raises SpecFileError for both syntax problems (with the line/column
    reported by the underlying parser) and semantic ones (zero shifts,
    reducible modulus, literals that do not parse in the declared field).
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise SpecFileError(f"syntax error: {exc}") from exc

    _check_keys(data, "top level", {"field", "blocks", "generator"})

    field_tab = data.get("field")
    if not isinstance(field_tab, dict):
        raise SpecFileError("missing [field] section")
    _check_keys(field_tab, "field", {"p", "degree", "modulus"})
    p = _require(field_tab, "field", "p")
    degree = field_tab.get("degree", 1)
    if not isinstance(p, int) or not isinstance(degree, int):
        raise SpecFileError("[field] keys 'p' and 'degree' must be integers")
    modulus = field_tab.get("modulus")
    if modulus is not None:
        modulus = _int_list(modulus, "field", "modulus")
    try:
        field = FieldSpec(p, degree, modulus)
    except ValueError as exc:
        raise SpecFileError(f"[field] does not define a field: {exc}") from exc

    blocks_tab = data.get("blocks")
    if not isinstance(blocks_tab, dict):
        raise SpecFileError("missing [blocks] section")
    _check_keys(blocks_tab, "blocks", {"lengths", "shifts"})
    lengths = _int_list(_require(blocks_tab, "blocks", "lengths"), "blocks", "lengths")
    shift_lits = _str_list(_require(blocks_tab, "blocks", "shifts"), "blocks", "shifts")
    if len(lengths) != len(shift_lits):
        raise SpecFileError(
            f"[blocks] has {len(lengths)} lengths but {len(shift_lits)} shifts"
        )
    if not lengths:
        raise SpecFileError("[blocks] key 'lengths' must not be empty")
    shifts = []
    for i, lit in enumerate(shift_lits):
        try:
            shifts.append(field.parse(lit))
        except ValueError as exc:
            raise SpecFileError(
                f"[blocks] shifts[{i}] = {lit!r} does not parse in {field.name}: {exc}"
            ) from exc

    gen_tables = data.get("generator")
    if not isinstance(gen_tables, list) or not gen_tables:
        raise SpecFileError("at least one [[generator]] section is required")
    generators = []
    for gi, tab in enumerate(gen_tables):
        section = f"generator #{gi + 1}"
        if not isinstance(tab, dict):
            raise SpecFileError(f"[[{section}]] must be a table")
        _check_keys(tab, section, {"blocks"})
        lits = _str_list(_require(tab, section, "blocks"), section, "blocks")
        if len(lits) != len(lengths):
            raise SpecFileError(
                f"[[{section}]] has {len(lits)} entries; expected one per block"
                f" ({len(lengths)})"
            )
        row = []
        for bi, lit in enumerate(lits):
            try:
                row.append(Poly.parse(field, lit))
            except ValueError as exc:
                raise SpecFileError(
                    f"[[{section}]] blocks[{bi}] = {lit!r} does not parse: {exc}"
                ) from exc
        generators.append(tuple(row))

    try:
        return MTSpec(field, tuple(lengths), tuple(shifts), tuple(generators))
    except ValueError as exc:
        raise SpecFileError(f"inconsistent spec: {exc}") from exc


def load_spec(path: str) -> MTSpec:
    try:
        with open(path, "rb") as fh:
            text = fh.read().decode("utf-8")
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise SpecFileError(f"{path} is not UTF-8: {exc}") from exc
    return parse_spec(text)


def format_spec(spec: MTSpec, comment: str | None = None) -> str:
    """Serialize a spec so that parse_spec recovers it exactly."""
    field = spec.field
    lines = []
    if comment:
        lines.extend(f"# {line}".rstrip() for line in comment.splitlines())
        lines.append("")
    lines.append("[field]")
    lines.append(f"p = {field.p}")
    if field.d > 1:
        lines.append(f"degree = {field.d}")
        lines.append(f"modulus = [{', '.join(str(c) for c in field.modulus)}]")
    lines.append("")
    lines.append("[blocks]")
    lines.append(f"lengths = [{', '.join(str(m) for m in spec.block_lengths)}]")
    shift_lits = ", ".join(f'"{field.format(s)}"' for s in spec.shifts)
    lines.append(f"shifts = [{shift_lits}]")
    for row in spec.generators:
        lines.append("")
        lines.append("[[generator]]")
        entries = ",\n".join(f'    "{poly}"' for poly in row)
        lines.append(f"blocks = [\n{entries},\n]")
    return "\n".join(lines) + "\n"
