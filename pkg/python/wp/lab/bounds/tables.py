import pandas as pd

from ..config import BoundsConfig
from .systolebounds import sys_floor, sys_lower, sys_upper, sys_upper_closed
from .inradius import inradius_bounds, inradius_upper_closed


def bounds_table(g_values, n=0, config: BoundsConfig = None):
    """One row of systole and inradius bounds per genus, for a fixed number of punctures."""

    config = config if config is not None else BoundsConfig()

    rows = []
    for g in g_values:
        lower, upper = inradius_bounds(g, n, config.U, config.K)
        rows.append(dict(
            g=int(g), n=int(n),
            sys_floor=sys_floor(),
            sys_lower=sys_lower(g, n, config.U),
            sys_upper=sys_upper(g, n),
            sys_upper_closed=sys_upper_closed(g),
            inradius_lower=lower,
            inradius_upper=upper,
            inradius_upper_closed=inradius_upper_closed(g)))
    return pd.DataFrame(rows)


def inversions(table: pd.DataFrame):
    """Rows where a lower bound exceeds the matching upper bound."""
    bad = (table['sys_floor'] > table['sys_upper']) | \
          (table['sys_lower'] > table['sys_upper']) | \
          (table['inradius_lower'] > table['inradius_upper'])
    return table[bad]
