import io
import json
from datetime import datetime, timezone

import numpy as np
import pandas as pd

from ..config.configjsonencoder import ConfigJSONEncoder
from .atomicwriter import AtomicWriter


def format_metadata(metadata, timestamps=False):
    """
    Render the metadata dictionary as `#`-prefixed header lines. Keys are
    written in sorted order so that reruns produce identical headers.
    """

    md = dict(metadata)
    if timestamps:
        md['created'] = datetime.now(timezone.utc).isoformat()

    lines = []
    for k in sorted(md.keys()):
        v = json.dumps(md[k], cls=ConfigJSONEncoder, sort_keys=True)
        lines.append(f'# {k}: {v}\n')
    return ''.join(lines)


def csv_body(df: pd.DataFrame, float_format='%.12g'):
    """CSV text of a data frame as written by `write_csv`, without the header."""
    body = io.StringIO()
    df.to_csv(body, index=False, lineterminator='\n', float_format=float_format)
    return body.getvalue()


def write_csv(path, df: pd.DataFrame, metadata=None, timestamps=False, float_format='%.12g'):
    """Write a data frame as CSV with a metadata header, atomically."""

    body = csv_body(df, float_format=float_format)

    with AtomicWriter(path) as f:
        if metadata is not None:
            f.write(format_metadata(metadata, timestamps=timestamps))
        f.write(body)


def read_csv(path):
    return pd.read_csv(path, comment='#')


def write_json(path, obj, metadata=None, timestamps=False):
    doc = dict(obj)
    if metadata is not None:
        md = dict(metadata)
        if timestamps:
            md['created'] = datetime.now(timezone.utc).isoformat()
        doc['metadata'] = md

    with AtomicWriter(path) as f:
        json.dump(doc, f, cls=ConfigJSONEncoder, indent=2, sort_keys=True)
        f.write('\n')


def write_figure(path, fig):
    """Save a matplotlib figure as SVG without volatile metadata."""

    import matplotlib

    matplotlib.rcParams['svg.hashsalt'] = 'wplab'
    with AtomicWriter(path) as f:
        fig.savefig(f, format='svg', metadata={'Date': None})


def body_lines(path):
    """Return the non-metadata lines of a CSV artifact."""

    with open(path, 'r', encoding='utf-8') as f:
        return [l for l in f.readlines() if not l.startswith('#')]  # noqa: E741


def finite_or_none(x):
    if x is None:
        return None
    x = float(x)
    return x if np.isfinite(x) else None


def artifact_metadata(config, anchor, **extra):
    """Header fields shared by every artifact of a run."""

    from .._version import VERSION

    md = dict(
        version=VERSION,
        command=config.command,
        seed=config.seed,
        tol=config.tol,
        budget=config.budget,
        radius=config.radius,
        tail_model=config.riera.tail_model,
        sphere_factor=config.sphere_factor,
        anchor=anchor)
    md.update(extra)
    return md
