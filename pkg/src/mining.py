"""
Disagreement mining

Draws seeded graph pairs, runs the positional heuristic and the exact oracle
on each, tallies agreements and archives every disagreement for replay.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Tuple

from tqdm import tqdm

from .archive import DisagreementArchive
from .config import config
from .corpus import (
    PROVENANCE_PERMUTED,
    GraphPair,
    derive_seed,
    emit_graph6,
    gen_connected_gnp,
    gen_independent_pair,
    gen_permuted_pair,
    make_rng,
    named_graph,
    parse_graph6,
)
from .exact_oracle import OracleResult, exact_isomorphism, exhaustive_isomorphism
from .iso_heuristic import CandidateMapping, FailureKind, PairCheck, check_pair, verify_mapping
from .models import DisagreementRecord, MiningReport

logger = logging.getLogger(__name__)

STRESS_PAIR = ("rook_4x4", "shrikhande")


@dataclass(frozen=True)
class TrialOutcome:
    trial: int
    pair: GraphPair
    check: PairCheck
    oracle: OracleResult
    exhaustive: Optional[bool] = None

    @property
    def agrees(self) -> bool:
        return self.check.verdict.is_isomorphic == self.oracle.isomorphic

    def to_record(self) -> DisagreementRecord:
        stage = self.check.verdict.failure_stage
        return DisagreementRecord(
            trial=self.trial,
            provenance=self.pair.provenance,
            left_g6=emit_graph6(self.pair.left),
            right_g6=emit_graph6(self.pair.right),
            heuristic=self.check.verdict.outcome.value,
            oracle=self.oracle.isomorphic,
            failure_stage=stage.describe() if stage else None,
            trace=list(self.check.trace.rounds),
        )


@dataclass(frozen=True)
class MiningSettings:
    seed: int
    min_n: int
    max_n: int
    edge_probability: float
    retries: int = 1000
    exhaustive_max_n: int = 8
    cross_check_rate: float = 0.0


def evaluate_pair(trial: int, pair: GraphPair, cross_check: bool = False,
                  exhaustive_max_n: int = 8) -> TrialOutcome:
    """Run heuristic and oracle on one pair"""
    check = check_pair(pair.left, pair.right)
    oracle = exact_isomorphism(pair.left, pair.right)
    exhaustive = None
    if cross_check and pair.left.order <= exhaustive_max_n:
        exhaustive = exhaustive_isomorphism(pair.left, pair.right, limit=exhaustive_max_n).isomorphic
    return TrialOutcome(trial, pair, check, oracle, exhaustive)


def draw_pair(trial: int, settings: MiningSettings) -> Tuple[GraphPair, bool]:
    """Seeded pair for one trial: relabeled copy or independent G(n, p), 50/50"""
    rng = make_rng(settings.seed, trial)
    n = int(rng.integers(settings.min_n, settings.max_n + 1))
    permuted = bool(rng.random() < 0.5)
    cross_check = bool(rng.random() < settings.cross_check_rate)
    pair_seed = derive_seed(settings.seed, trial, 1)
    if permuted:
        base = gen_connected_gnp(n, settings.edge_probability, pair_seed, settings.retries)
        pair = gen_permuted_pair(base, derive_seed(settings.seed, trial, 2))
    else:
        pair = gen_independent_pair(n, settings.edge_probability, pair_seed, settings.retries)
    return pair, cross_check


def run_trial(trial: int, settings: MiningSettings) -> TrialOutcome:
    pair, cross_check = draw_pair(trial, settings)
    return evaluate_pair(trial, pair, cross_check, settings.exhaustive_max_n)


def stress_pair() -> GraphPair:
    left, right = STRESS_PAIR
    return GraphPair(named_graph(left), named_graph(right), f"named:{left}/{right}")


class MiningPipeline:
    """Accumulate trial outcomes into a report and archive disagreements"""

    def __init__(self, settings: MiningSettings, output_path: Path):
        self.settings = settings
        self.archive = DisagreementArchive(output_path)
        self.stats = {
            'trials': 0,
            'agreements': 0,
            'permuted_trials': 0,
            'permuted_round_one_rejects': 0,
            'disconnected_intermediate_count': 0,
            'verified_mappings': 0,
            'unsound_witnesses': 0,
            'cross_checked': 0,
            'oracle_mismatches': 0,
        }
        self.false_accepts: List[DisagreementRecord] = []
        self.false_rejects: List[DisagreementRecord] = []

    def _outcomes(self, trials: int, workers: int) -> Iterator[TrialOutcome]:
        worker = partial(run_trial, settings=self.settings)
        if workers <= 1:
            for trial in range(trials):
                yield worker(trial)
            return
        with ProcessPoolExecutor(max_workers=workers) as executor:
            # map() yields in submission order, so the report matches a serial run
            yield from executor.map(worker, range(trials), chunksize=max(1, trials // (workers * 8)))

    def run(self, trials: int, workers: int = 1, stress: bool = True,
            progress: bool = True) -> MiningReport:
        logger.info(
            f"Mining {trials} trials, n in [{self.settings.min_n}, {self.settings.max_n}], "
            f"p={self.settings.edge_probability}, seed={self.settings.seed}"
        )
        self.archive.prepare()

        outcomes: Iterable[TrialOutcome] = self._outcomes(trials, workers)
        for outcome in tqdm(outcomes, total=trials, desc="Mining", disable=not progress):
            self.record(outcome)

        if stress and trials > 0:
            self.record(evaluate_pair(trials, stress_pair()))

        report = MiningReport(
            seed=self.settings.seed,
            min_n=self.settings.min_n,
            max_n=self.settings.max_n,
            edge_probability=self.settings.edge_probability,
            false_accepts=self.false_accepts,
            false_rejects=self.false_rejects,
            **self.stats,
        )
        self.archive.save_report(report)
        logger.info(f"Mining complete. Stats: {report.summary()}")
        return report

    def record(self, outcome: TrialOutcome):
        """Fold one outcome into the tally; archives it if it is a disagreement"""
        self.stats['trials'] += 1
        check, oracle = outcome.check, outcome.oracle
        permuted = outcome.pair.provenance == PROVENANCE_PERMUTED
        stage = check.verdict.failure_stage

        if permuted:
            self.stats['permuted_trials'] += 1
            if stage is not None and stage.kind is FailureKind.UNMATCHED and stage.round == 1:
                self.stats['permuted_round_one_rejects'] += 1
                logger.error(f"Trial {outcome.trial}: relabeled pair rejected in round 1")
        if stage is not None and stage.kind is FailureKind.DISCONNECTED_INTERMEDIATE:
            self.stats['disconnected_intermediate_count'] += 1

        if check.mapping_verified:
            self.stats['verified_mappings'] += 1
            if not oracle.isomorphic:
                self.stats['unsound_witnesses'] += 1
                logger.error(f"Trial {outcome.trial}: verified mapping but oracle says not isomorphic")

        if oracle.witness is not None:
            witness = CandidateMapping(oracle.witness.as_dict())
            if not verify_mapping(outcome.pair.left, outcome.pair.right, witness):
                self.stats['oracle_mismatches'] += 1
                logger.error(f"Trial {outcome.trial}: oracle witness fails verification")
        if outcome.exhaustive is not None:
            self.stats['cross_checked'] += 1
            if outcome.exhaustive != oracle.isomorphic:
                self.stats['oracle_mismatches'] += 1
                logger.error(f"Trial {outcome.trial}: backtracking and enumeration disagree")

        if outcome.agrees:
            self.stats['agreements'] += 1
            return

        record = outcome.to_record()
        if record.is_false_accept:
            self.false_accepts.append(record)
        else:
            self.false_rejects.append(record)
        logger.warning(
            f"Trial {outcome.trial} ({outcome.pair.provenance}): heuristic "
            f"{record.heuristic}, oracle isomorphic={oracle.isomorphic}"
        )
        self.archive.save_disagreement(record, outcome.pair.left, outcome.pair.right)


@dataclass(frozen=True)
class ReplayResult:
    record: DisagreementRecord
    heuristic: str
    oracle: bool
    failure_stage: Optional[str]

    @property
    def reproduced(self) -> bool:
        return (
            self.heuristic == self.record.heuristic
            and self.oracle == self.record.oracle
            and self.failure_stage == self.record.failure_stage
        )


def replay_archive(output_path: Path) -> List[ReplayResult]:
    """Reload every archived pair and re-run heuristic and oracle"""
    results = []
    for record in DisagreementArchive(output_path).load_records():
        left, right = parse_graph6(record.left_g6), parse_graph6(record.right_g6)
        check = check_pair(left, right)
        stage = check.verdict.failure_stage
        results.append(ReplayResult(
            record=record,
            heuristic=check.verdict.outcome.value,
            oracle=exact_isomorphism(left, right).isomorphic,
            failure_stage=stage.describe() if stage else None,
        ))
    return results


def settings_from_config(**overrides) -> MiningSettings:
    values = dict(
        seed=config.DEFAULT_SEED,
        min_n=config.MINE_MIN_N,
        max_n=config.MINE_MAX_N,
        edge_probability=config.EDGE_PROBABILITY,
        retries=config.CONNECTED_RETRIES,
        exhaustive_max_n=config.EXHAUSTIVE_MAX_N,
        cross_check_rate=config.CROSS_CHECK_RATE,
    )
    values.update({k: v for k, v in overrides.items() if v is not None})
    return MiningSettings(**values)
