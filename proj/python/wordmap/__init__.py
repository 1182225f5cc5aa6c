"""Word maps on finite groups: letter classes, reductions and character expansions.

The heavy lifting lives in the compiled ``_wordmap`` module; this package
re-exports it and adds a few conveniences.
"""

import json as _json

from ._wordmap import (  # noqa: F401
    DEFAULT_BUDGET,
    DEFAULT_TABLE_SEED,
    AlphabetError,
    BudgetError,
    CharacterTable,
    Error,
    Group,
    ParseError,
    ReducedForm,
    ValidationError,
    Word,
    WordShapeError,
    builtin_group,
    builtin_group_names,
    builtin_table,
    classify,
    compute_table,
    distribution,
    expand,
    genus,
    group_from_generators,
    load_group,
    load_table,
    normalize,
    oracle_coefficients,
    run_cli,
)


def reduce(word, order="squares"):
    """The reduction of ``word`` as a plain dict (same layout as ``wordmap reduce --format json``)."""
    if isinstance(word, str):
        word = Word(word)
    return _json.loads(normalize(word, order).to_json())


def cli_json(*args):
    """Run a CLI command with JSON output and return the parsed result.

    Raises RuntimeError carrying the exit code and stderr on failure.
    """
    code, out, err = run_cli(list(args) + ["--format", "json"])
    if code != 0:
        raise RuntimeError(f"wordmap exited with {code}: {err.strip()}")
    return _json.loads(out)
