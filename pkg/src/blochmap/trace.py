"""Time-series container shared by the integrators and the CLI."""

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class ChannelTrace:
    """A regular time grid with one named column per sampled quantity."""

    times: np.ndarray
    columns: tuple[str, ...]
    values: np.ndarray  # shape (len(times), len(columns))

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if values.shape != (times.size, len(self.columns)):
            raise ValueError(
                f"values shape {values.shape} does not match "
                f"{times.size} times x {len(self.columns)} columns"
            )
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.times.size

    def column(self, name: str) -> np.ndarray:
        return self.values[:, self.columns.index(name)]
