import os
import numpy as np
from matplotlib.figure import Figure

from .constants import Constants
from .setup_logger import logger
from .util.artifacts import write_figure


class LabTrace():
    """
    Plots intermediate and final results as static SVG figures. Every `on_*`
    method is fired by the command that produced the data.
    """

    def __init__(self, figdir='.', plot=True):
        self.figdir = figdir
        self.plot = plot

        self.__figures = {}

    def init_from_args(self, args):
        if args is not None and 'plot' in args:
            self.plot = bool(args['plot'])

    def __get_figure(self, name, figsize=(6.5, 3.5)):
        if name not in self.__figures:
            self.__figures[name] = Figure(figsize=figsize)
        return self.__figures[name]

    def flush_figures(self):
        if self.__figures:
            os.makedirs(self.figdir, exist_ok=True)
        for name, f in self.__figures.items():
            fn = os.path.join(self.figdir, Constants.FIGURE_FILENAME.format(name=name))
            f.tight_layout()
            write_figure(fn, f)
            logger.debug(f'Figure saved to `{fn}`.')
        self.__figures = {}

    def on_bounds(self, table):
        """Fired when the bounds table is evaluated."""

        if not self.plot:
            return

        f = self.__get_figure('bounds')
        ax = f.add_subplot(1, 1, 1)
        ax.plot(table['g'], table['sys_floor'], label='floor')
        ax.plot(table['g'], table['sys_lower'], label='lower')
        ax.plot(table['g'], table['sys_upper'], label='upper')
        ax.plot(table['g'], table['inradius_upper'], '--', label='inradius upper')
        ax.set_xscale('log')
        ax.set_xlabel('genus')
        ax.set_ylabel('length')
        ax.legend()

        self.flush_figures()

    def on_decay(self, table, onset=None):
        """Fired when the decay certificate is evaluated."""

        if not self.plot:
            return

        f = self.__get_figure('decay')
        ax = f.add_subplot(1, 1, 1)
        ax.plot(table['g'], table['log_ratio'], 'o-')
        if onset is not None:
            ax.set_title(f'decrease sets in at g = 2^{int(np.log2(float(onset)))}')
        ax.set_xscale('log', base=2)
        ax.set_yscale('symlog')
        ax.set_xlabel('genus')
        ax.set_ylabel('log ratio')

        self.flush_figures()

    def on_path(self, name, df):
        """Fired when a path or a flow has been sampled."""

        if not self.plot or len(df) == 0:
            return

        f = self.__get_figure(name, figsize=(6.5, 5.0))
        ax1 = f.add_subplot(2, 1, 1)
        ax1.plot(df['t'], df['systole'], '.-')
        ax1.set_ylabel('systole')

        ax2 = f.add_subplot(2, 1, 2, sharex=ax1)
        ax2.plot(df['t'], df['cum_length'], '.-')
        ax2.set_xlabel('t')
        ax2.set_ylabel('WP length')

        self.flush_figures()

    def on_verify(self, ratios):
        """Fired at the end of verification with a dictionary of sampled ratios."""

        ratios = {k: v for k, v in ratios.items() if len(v) > 0}
        if not self.plot or not ratios:
            return

        f = self.__get_figure('verify', figsize=(6.5, 2.5 * len(ratios)))
        for i, (name, values) in enumerate(sorted(ratios.items())):
            ax = f.add_subplot(len(ratios), 1, i + 1)
            ax.hist(np.asarray(values, dtype=float), bins=20)
            ax.set_title(name)

        self.flush_figures()
