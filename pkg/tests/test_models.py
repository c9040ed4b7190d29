"""
Test suite for shared records: value formatting and time series.
"""

import numpy as np
import pytest

from gravicav.errors import InvalidParameter
from gravicav.models import TimeSeries, format_value


class TestFormatValue:

    @pytest.mark.parametrize("value, expected", [
        (0.1, "0.10000000000000001"),
        (3, "3"),
        (True, "true"),
        (False, "false"),
        ("rotating", "rotating"),
    ])
    def test_builtin_values(self, value, expected):
        assert format_value(value) == expected

    @pytest.mark.parametrize("value, expected", [
        (np.float64(0.1), "0.10000000000000001"),
        (np.float32(0.5), "0.5"),
        (np.int64(2001), "2001"),
        (np.bool_(True), "true"),
        (np.bool_(False), "false"),
    ])
    def test_numpy_scalars_match_builtins(self, value, expected):
        assert format_value(value) == expected


class TestTimeSeries:

    def test_csv_with_numpy_row(self):
        series = TimeSeries(columns=["t", "n", "flag"])
        series.append(np.float64(0.5), np.int64(3), np.bool_(True))
        assert series.to_csv().splitlines() == ["t,n,flag", "0.5,3,true"]

    def test_row_length_checked(self):
        series = TimeSeries(columns=["t", "F"])
        with pytest.raises(InvalidParameter):
            series.append(0.0)

    def test_from_columns(self):
        series = TimeSeries.from_columns({"t": [0.0, 1.0], "F": [0.1, 0.2]})
        assert len(series) == 2
        assert series.column("F") == [0.1, 0.2]
