"""Crossing detection between consecutive trading days and braid assembly.

Strand positions are price ranks: position 1 holds the lowest-priced
stock of the day, ties broken by lexicographic ticker order.  When the
rank order changes between two days, the permutation is decomposed into
adjacent swaps by a bubble sort that sweeps positions left to right
repeatedly until sorted; one crossing event is emitted per swap, in
schedule order, and every event in the interval carries the two stocks'
own absolute price changes across the same pair of days.

Classification keys on the pre-swap higher-priced stock of the pair: the
crossing is an overcrossing (positive generator) when that stock's price
change strictly exceeds the other's, an undercrossing (negative
generator) when it is strictly smaller.  Equal changes fall back to the
higher price on the later day, then to the lexicographically smaller
ticker crossing over.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from datetime import date
from decimal import Decimal

from .braid import BraidWord, Generator
from .market import PriceSeries


class CrossingSign(enum.Enum):
    """Over maps to the positive generator, under to the negative one."""

    OVER = "over"
    UNDER = "under"

    @property
    def exponent(self) -> int:
        return 1 if self is CrossingSign.OVER else -1


@dataclass(frozen=True)
class CrossingEvent:
    """One adjacent swap between consecutive dates.

    lower_ticker and upper_ticker occupied rank positions i and i+1
    before the swap; delta_* are the stocks' own absolute price changes
    across the interval and *_after_cents their prices on to_date, all
    in cents.
    """

    from_date: date
    to_date: date
    position: int
    lower_ticker: str
    upper_ticker: str
    delta_lower_cents: int
    delta_upper_cents: int
    lower_after_cents: int
    upper_after_cents: int

    @property
    def delta_lower(self) -> Decimal:
        return Decimal(self.delta_lower_cents).scaleb(-2)

    @property
    def delta_upper(self) -> Decimal:
        return Decimal(self.delta_upper_cents).scaleb(-2)


def rank_order(series: PriceSeries, on: date) -> list[str]:
    """Tickers sorted ascending by price on the given date; exact ties
    rank the lexicographically smaller ticker lower."""
    row = series.prices_cents[series.date_index(on)]
    return [
        t for _, t in sorted(zip(row, series.tickers), key=lambda pair: (pair[0], pair[1]))
    ]


def detect_crossings(series: PriceSeries) -> list[CrossingEvent]:
    """All crossing events of the series, one per adjacent swap, ordered
    by interval and then by bubble-sort schedule."""
    if len(series.dates) < 2:
        raise ValueError("crossing detection needs at least two dates")
    events: list[CrossingEvent] = []
    order = rank_order(series, series.dates[0])
    for from_date, to_date in zip(series.dates, series.dates[1:]):
        target = rank_order(series, to_date)
        target_pos = {ticker: i for i, ticker in enumerate(target)}
        from_row = series.prices_cents[series.date_index(from_date)]
        to_row = series.prices_cents[series.date_index(to_date)]
        delta = {t: abs(to_row[i] - from_row[i]) for i, t in enumerate(series.tickers)}
        after = {t: to_row[i] for i, t in enumerate(series.tickers)}
        arrangement = list(order)
        swapped = True
        while swapped:
            swapped = False
            for i in range(len(arrangement) - 1):
                lower, upper = arrangement[i], arrangement[i + 1]
                if target_pos[lower] > target_pos[upper]:
                    arrangement[i], arrangement[i + 1] = upper, lower
                    swapped = True
                    events.append(
                        CrossingEvent(
                            from_date=from_date,
                            to_date=to_date,
                            position=i + 1,
                            lower_ticker=lower,
                            upper_ticker=upper,
                            delta_lower_cents=delta[lower],
                            delta_upper_cents=delta[upper],
                            lower_after_cents=after[lower],
                            upper_after_cents=after[upper],
                        )
                    )
        order = target
    return events


def classify_crossing(event: CrossingEvent) -> CrossingSign:
    """Over iff the pre-swap higher-priced stock out-moved the other.

    The tie-break chain (later-day price, then ticker order) makes the
    sign deterministic for any input.
    """
    if event.delta_upper_cents != event.delta_lower_cents:
        return (
            CrossingSign.OVER
            if event.delta_upper_cents > event.delta_lower_cents
            else CrossingSign.UNDER
        )
    if event.upper_after_cents != event.lower_after_cents:
        return (
            CrossingSign.OVER
            if event.upper_after_cents > event.lower_after_cents
            else CrossingSign.UNDER
        )
    crosses_over = min(event.upper_ticker, event.lower_ticker)
    return CrossingSign.OVER if crosses_over == event.upper_ticker else CrossingSign.UNDER


def build_braid(series: PriceSeries) -> BraidWord:
    """The braid word of the whole series: classified crossings in
    detection order, strand 1 anchored to the lowest-priced stock on the
    first date."""
    if len(series.tickers) < 2:
        raise ValueError("braid construction needs at least two tickers")
    gens = tuple(
        Generator(event.position, classify_crossing(event).exponent)
        for event in detect_crossings(series)
    )
    return BraidWord(len(series.tickers), gens)


def audit_log(series: PriceSeries) -> list[dict]:
    """JSON-ready record of every crossing: dates, tickers, both price
    changes as printed decimals, and the classified sign."""
    entries = []
    for event in detect_crossings(series):
        sign = classify_crossing(event)
        entries.append(
            {
                "from_date": event.from_date.isoformat(),
                "to_date": event.to_date.isoformat(),
                "position": event.position,
                "lower_ticker": event.lower_ticker,
                "upper_ticker": event.upper_ticker,
                "delta_lower": str(event.delta_lower),
                "delta_upper": str(event.delta_upper),
                "sign": sign.value,
                "generator": event.position * sign.exponent,
            }
        )
    return entries
