import os
import numpy as np
import pandas as pd

from .constants import Constants
from .setup_logger import logger
from .laberror import ConfigError, BudgetExceeded, TailNotConvergent, StepTooLarge, LeftThickPart
from .config import LabConfig
from .util import Timer
from .util.artifacts import write_csv, write_json, artifact_metadata
from .fuchsian import Topology, FNCoordinates, build_group, systole, enumerate_classes, random_thick_fn
from .riera import grad_pairing, PairingResult
from .wpmetric import CurveBasis, FNPath, MetricContext, gram_matrix, lipschitz_check, systole_trace, \
    pinch_flow, dist_to_stratum_bound
from .bounds import bounds_table, inversions, decay_certificate, decay_onset, sys_floor, two_curve_lower, \
    ricci_constant_estimate, thick_part_floor, sys_upper_n_direction, inradius_n_bounds
from .labtrace import LabTrace
from .pipeline import Pipeline


class LabPipeline(Pipeline):
    """
    Executes a single command of the laboratory on an input document: a
    surface given by its Fenchel-Nielsen coordinates, a path through such
    points, or nothing for the bound tables. Without an input surface a random
    thick genus two surface is drawn from the seed.
    """

    def __init__(self, script, config: LabConfig, trace: LabTrace = None, document: dict = None):
        super().__init__(script=script, config=config, trace=trace)

        commands = {
            'systole': self.__step_systole,
            'riera': self.__step_riera,
            'gram': self.__step_gram,
            'path': self.__step_path,
            'pinch': self.__step_pinch,
            'bounds': self.__step_bounds,
            'decay': self.__step_decay,
        }

        self._steps = [
            {
                'name': 'init',
                'func': self.__step_init,
                'critical': True,
            },
            {
                'name': config.command,
                'func': commands[config.command],
                'critical': True,
            },
        ]

        self.__document = document if document is not None else {}
        self.__context = MetricContext(config.enumeration, config.riera, config.flow, budget=config.budget)

    def _get_log_message_step_start(self, name):
        return f'Executing `{name}`'

    def _get_log_message_step_stop(self, name):
        return f'Command step `{name}` completed successfully in {{:.3f}} sec.'

    def __path(self, filename, **kwargs):
        return os.path.join(self.config.outdir, filename.format(**kwargs))

    def __metadata(self, anchor, **extra):
        return artifact_metadata(self.config, anchor, **extra)

    def __write_csv(self, filename, df, metadata):
        fn = self.__path(filename)
        write_csv(fn, df, metadata=metadata, timestamps=self.config.timestamps)
        logger.info(f'Table written to `{fn}`.')

    def __write_json(self, filename, obj, metadata, **kwargs):
        fn = self.__path(filename, **kwargs)
        write_json(fn, obj, metadata=metadata, timestamps=self.config.timestamps)
        logger.info(f'Report written to `{fn}`.')

    def __surface(self):
        if 'lengths' in self.__document:
            fn = FNCoordinates.from_dict(self.__document)
        elif self.__document.get('surface') is not None:
            fn = FNCoordinates.from_dict(self.__document['surface'])
        else:
            rng = np.random.default_rng(self.config.seed)
            fn, _ = random_thick_fn(Topology.genus2(), rng, self.config.sampling, self.config.enumeration)
            logger.info(f'No input surface, sampled lengths {fn.lengths} and twists {fn.twists}.')
        return fn

    def __build_group(self, fn):
        with Timer(message='Surface group and Dirichlet domain built in {:.3f} seconds.') as timer:
            grp = build_group(fn, config=self.config.enumeration, budget=self.config.budget)
            timer.stamp()
        return grp

    def __basis(self, fn):
        words = self.__document.get('words')
        if words is not None:
            return CurveBasis.from_words(fn, words, self.config.flow, self.config.enumeration)
        return CurveBasis.standard(fn, self.config.flow, self.config.enumeration)

    def __attach_systoles(self, path: FNPath):
        trace = systole_trace(path, self.__context, ts=[s.t for s in path.samples])
        for s, t in zip(path.samples, trace.samples):
            s.systole = t.systole
            s.systolic_words = t.systolic_words
        return trace

    # region Step: init

    def __step_init(self):
        self._create_dir('output', self.config.outdir)
        fn = os.path.join(self.config.outdir, f'config_{self.config.command}.yaml')
        self.config.save(fn)
        logger.info(f'Runtime configuration file saved to `{fn}`.')
        return True, False

    # endregion
    # region Step: systole

    def __step_systole(self):
        fn = self.__surface()
        enumeration, budget = self.config.enumeration, self.config.budget

        grp = self.__build_group(fn)
        length, systolic = systole(fn, config=enumeration, budget=budget, grp=grp)
        classes = systolic
        if self.config.l_max is not None and self.config.l_max > length:
            classes = enumerate_classes(grp, self.config.l_max, config=enumeration, budget=budget)

        metadata = self.__metadata(Constants.ANCHOR_SYSTOLE)
        df = pd.DataFrame([c.to_record() for c in classes])
        self.__write_csv(Constants.SYSTOLE_CSV_FILENAME, df, metadata)
        self.__write_json(Constants.SYSTOLE_JSON_FILENAME,
                          dict(surface=fn.to_dict(), systole=length,
                               systolic_words=[c.word for c in systolic],
                               domain_radius=grp.base_domain_radius,
                               relation_residual=grp.relation_residual), metadata)

        logger.info(f'Systole {length:.9f} realized by {[ c.word for c in systolic ]}.')
        return True, False

    # endregion
    # region Step: riera

    def __step_riera(self):
        fn = self.__surface()
        enumeration, budget = self.config.enumeration, self.config.budget
        grp = self.__build_group(fn)

        alpha = self.config.alpha or self.__document.get('alpha')
        if alpha is None:
            _, systolic = systole(fn, config=enumeration, budget=budget, grp=grp)
            alpha = systolic[0].word
        beta = self.config.beta or self.__document.get('beta') or alpha

        a, b = grp.geodesic_class(alpha), grp.geodesic_class(beta)
        try:
            result = grad_pairing(grp, a, b, radius=self.config.radius,
                                  config=self.config.riera, budget=budget)
        except (BudgetExceeded, TailNotConvergent) as ex:
            if isinstance(ex.partial, PairingResult):
                self.__write_riera(fn, ex.partial, partial=True)
            raise

        self.__write_riera(fn, result)
        logger.info(f'Pairing of `{alpha}` and `{beta}` in [{result.lo:.9f}, {result.hi:.9f}].')
        return True, False

    def __write_riera(self, fn, result: PairingResult, partial=False):
        metadata = self.__metadata(Constants.ANCHOR_RIERA, fitted=result.fitted_constants, partial=partial)
        doc = result.to_dict()
        doc['surface'] = fn.to_dict()
        self.__write_json(Constants.RIERA_JSON_FILENAME, doc, metadata, alpha=result.alpha, beta=result.beta)

    # endregion
    # region Step: gram

    def __step_gram(self):
        fn = self.__surface()
        basis = self.__basis(fn)
        gram = gram_matrix(fn, basis, tol=self.config.tol, riera=self.config.riera,
                           config=self.config.enumeration, budget=self.config.budget)

        rows = []
        for i, wi in enumerate(gram.words):
            for j, wj in enumerate(gram.words):
                rows.append(dict(word_i=wi, word_j=wj, lo=gram.lo[i, j], hi=gram.hi[i, j],
                                 value=gram.matrix[i, j]))

        metadata = self.__metadata(Constants.ANCHOR_GRAM,
                                   min_eigenvalue=gram.min_eigenvalue,
                                   condition_number=gram.condition_number,
                                   asymmetry=gram.asymmetry,
                                   independence_score=basis.independence_score)
        self.__write_csv(Constants.GRAM_CSV_FILENAME, pd.DataFrame(rows), metadata)
        return True, False

    # endregion
    # region Step: path

    def __load_path(self):
        doc = self.__document
        if 'knots' in doc:
            points = [FNCoordinates.from_dict(k) for k in doc['knots']]
        elif 'start' in doc and 'end' in doc:
            points = [FNCoordinates.from_dict(doc['start']), FNCoordinates.from_dict(doc['end'])]
        else:
            raise ConfigError('A path document needs `knots` or `start` and `end`.')
        return FNPath.through(points)

    def __step_path(self):
        path = self.__load_path()
        basis = self.__basis(path.start)

        report = lipschitz_check(path, basis, self.__context, slack=self.config.verify.lipschitz_slack)
        trace = self.__attach_systoles(path)
        df = path.to_dataframe()

        metadata = self.__metadata(Constants.ANCHOR_PATH, fitted=dict(
            K_hat=report.k_hat), basis=list(basis.words))
        self.__write_csv(Constants.PATH_CSV_FILENAME, df, metadata)
        self.__write_json(Constants.PATH_JSON_FILENAME,
                          dict(length=report.length, switches=trace.switches, lipschitz=report.to_dict()),
                          metadata)

        if self.trace is not None:
            self.trace.on_path('path', df)

        return True, False

    # endregion
    # region Step: pinch

    def __step_pinch(self):
        fn = self.__surface()
        basis = self.__basis(fn)
        if not 0 <= self.config.curve < fn.topology.curve_count:
            raise ConfigError(f'Pants curve index {self.config.curve} out of range.')

        alpha = basis.words[self.config.curve]
        start = fn.lengths[self.config.curve]
        target = self.config.target if self.config.target is not None else self.__document.get(
            'target', start / 4)

        metadata = self.__metadata(Constants.ANCHOR_FLOW, alpha=alpha, target=target, basis=list(basis.words))
        try:
            path = pinch_flow(fn, alpha, target, basis=basis, context=self.__context)
        except (StepTooLarge, LeftThickPart) as ex:
            if ex.partial is not None:
                metadata['partial'] = True
                self.__write_csv(Constants.PINCH_CSV_FILENAME, ex.partial.to_dataframe(), metadata)
            raise

        self.__attach_systoles(path)
        df = path.to_dataframe()

        speeds = np.array([s.speed for s in path.samples[1:]]) / \
        path.duration if path.duration > 0 else np.ones(1)  # noqa: E122
        leaf_bound = np.sqrt(2 * np.pi * start) - np.sqrt(2 * np.pi * target)
        self.__write_csv(Constants.PINCH_CSV_FILENAME, df, metadata)
        self.__write_json(Constants.PINCH_JSON_FILENAME,
                          dict(alpha=alpha, start=start, target=target,
                               accumulated_length=path.accumulated_length,
                               leaf_bound=float(leaf_bound),
                               stratum_bound=dist_to_stratum_bound(fn, [self.config.curve]),
                               steps=len(path.samples) - 1,
                               min_speed=float(np.min(speeds)), max_speed=float(np.max(speeds))),
                          metadata)

        if self.trace is not None:
            self.trace.on_path('pinch', df)

        return True, False

    # endregion
    # region Step: bounds

    def __step_bounds(self):
        bounds = self.config.bounds
        g_max = self.config.g_max if self.config.g_max is not None else bounds.g_max
        n = self.config.punctures

        table = bounds_table(range(2, g_max + 1), n, bounds)
        bad = inversions(table)
        if len(bad) > 0:
            logger.warning(f'{len(bad)} rows of the bounds table have a lower bound above the upper bound.')

        n_direction = []
        for k in range(1, bounds.n_max + 1):
            lower, upper = inradius_n_bounds(2, k, bounds.K)
            n_direction.append(dict(n=k, sys_upper_n_direction=sys_upper_n_direction(k, 0.5),
                                    inradius_lower=lower, inradius_upper=upper))

        metadata = self.__metadata(Constants.ANCHOR_SYS_LOWER, U=bounds.U, K=bounds.K, punctures=n)
        self.__write_csv(Constants.BOUNDS_CSV_FILENAME, table, metadata)
        self.__write_json(Constants.BOUNDS_JSON_FILENAME,
                          dict(verdict=len(bad) == 0, inversions=len(bad),
                               sys_floor=sys_floor(),
                               two_curve_lower=two_curve_lower(bounds.K),
                               ricci_constant_estimate=ricci_constant_estimate(self.config.riera.eps0),
                               thick_part_floor=thick_part_floor(float(table['inradius_lower'].iloc[0])),
                               n_direction=n_direction),
                          metadata)

        if self.trace is not None:
            self.trace.on_bounds(table)

        return True, False

    # endregion
    # region Step: decay

    def __step_decay(self):
        bounds = self.config.bounds
        report = decay_certificate(bounds.decay_grid, c_prime=bounds.C_prime, epsilon=bounds.epsilon,
                                   sphere_factor=bounds.sphere_factor)
        onset = decay_onset(c_prime=bounds.C_prime, epsilon=bounds.epsilon,
                            sphere_factor=bounds.sphere_factor)
        table = pd.DataFrame(report.extra['table'])

        metadata = self.__metadata(Constants.ANCHOR_DECAY, C_prime=bounds.C_prime, epsilon=bounds.epsilon)
        self.__write_csv(Constants.DECAY_CSV_FILENAME, table, metadata)
        doc = report.to_dict()
        doc.pop('table')
        doc['onset'] = onset
        self.__write_json(Constants.DECAY_JSON_FILENAME, doc, metadata)

        logger.info(f'Decay verdict on the grid: {report.extra["verdict"]}, decrease from genus {onset}.')
        if self.trace is not None:
            self.trace.on_decay(table, onset=onset)

        return True, False

    # endregion
