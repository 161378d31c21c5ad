//! Timestamp-aligned value series at a fixed interval.
//!
//! `TimeSeries` is the carrier for prices, returns, signals, and variance
//! paths. Values sit on a regular grid of `interval_secs` starting at
//! `start_minute` (epoch minutes, UTC). Filled gaps are flagged in
//! `gap_mask` so downstream analyses can exclude them.

use std::io::{BufRead, BufReader, Read, Write};
use std::ops::Range;

use crate::error::{Error, Result};

pub const SECS_PER_MINUTE: u32 = 60;

#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    start_minute: i64,
    interval_secs: u32,
    values: Vec<f64>,
    gap_mask: Vec<bool>,
}

impl TimeSeries {
    pub fn new(start_minute: i64, values: Vec<f64>, gap_mask: Vec<bool>) -> Result<Self> {
        if values.len() != gap_mask.len() {
            return Err(Error::Argument(format!(
                "values ({}) and gap_mask ({}) must have equal length",
                values.len(),
                gap_mask.len()
            )));
        }
        Ok(Self { start_minute, interval_secs: SECS_PER_MINUTE, values, gap_mask })
    }

    /// Series with no gap flags set.
    pub fn from_values(start_minute: i64, values: Vec<f64>) -> Self {
        let gap_mask = vec![false; values.len()];
        Self { start_minute, interval_secs: SECS_PER_MINUTE, values, gap_mask }
    }

    pub fn with_interval(mut self, interval_secs: u32) -> Result<Self> {
        if interval_secs == 0 {
            return Err(Error::Argument("interval must be > 0".into()));
        }
        self.interval_secs = interval_secs;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn start_minute(&self) -> i64 {
        self.start_minute
    }

    pub fn interval_secs(&self) -> u32 {
        self.interval_secs
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn gap_mask(&self) -> &[bool] {
        &self.gap_mask
    }

    pub fn gap_count(&self) -> usize {
        self.gap_mask.iter().filter(|&&g| g).count()
    }

    /// Epoch minute of index `i`.
    pub fn minute_at(&self, i: usize) -> i64 {
        self.start_minute + i as i64
    }

    /// Sub-series over `range` (indices), preserving timestamps.
    pub fn slice(&self, range: Range<usize>) -> Result<Self> {
        if range.end > self.values.len() || range.start > range.end {
            return Err(Error::Argument(format!(
                "slice {}..{} out of range for series of length {}",
                range.start,
                range.end,
                self.values.len()
            )));
        }
        Ok(Self {
            start_minute: self.start_minute + range.start as i64,
            interval_secs: self.interval_secs,
            values: self.values[range.clone()].to_vec(),
            gap_mask: self.gap_mask[range].to_vec(),
        })
    }

    /// Pointwise map of values, keeping timestamps and gap flags.
    pub fn map_values(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            start_minute: self.start_minute,
            interval_secs: self.interval_secs,
            values: self.values.iter().map(|&v| f(v)).collect(),
            gap_mask: self.gap_mask.clone(),
        }
    }

    /// Fails unless `other` covers the same minutes at the same interval.
    pub fn check_aligned(&self, other: &Self) -> Result<()> {
        if self.interval_secs != other.interval_secs {
            return Err(Error::Alignment(format!(
                "interval mismatch: {}s vs {}s",
                self.interval_secs, other.interval_secs
            )));
        }
        if self.start_minute != other.start_minute {
            return Err(Error::Alignment(format!(
                "start mismatch: minute {} vs {}",
                self.start_minute, other.start_minute
            )));
        }
        if self.values.len() != other.values.len() {
            return Err(Error::Alignment(format!(
                "length mismatch: {} vs {}",
                self.values.len(),
                other.values.len()
            )));
        }
        Ok(())
    }

    /// Restrict both series to their common time range.
    pub fn align_overlap(&self, other: &Self) -> Result<(Self, Self)> {
        if self.interval_secs != other.interval_secs {
            return Err(Error::Alignment(format!(
                "interval mismatch: {}s vs {}s",
                self.interval_secs, other.interval_secs
            )));
        }
        let start = self.start_minute.max(other.start_minute);
        let end = (self.start_minute + self.len() as i64).min(other.start_minute + other.len() as i64);
        if end <= start {
            return Err(Error::Alignment("series do not overlap in time".into()));
        }
        let a0 = (start - self.start_minute) as usize;
        let b0 = (start - other.start_minute) as usize;
        let n = (end - start) as usize;
        Ok((self.slice(a0..a0 + n)?, other.slice(b0..b0 + n)?))
    }

    /// Write as `minute_epoch,value,is_gap` rows with a header.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "minute_epoch,value,is_gap")?;
        for (i, (&v, &g)) in self.values.iter().zip(&self.gap_mask).enumerate() {
            writeln!(w, "{},{},{}", self.minute_at(i), v, g as u8)?;
        }
        Ok(())
    }

    /// Read a series written by [`TimeSeries::write_csv`]. Also accepts
    /// two-column `minute_epoch,value` files (no gap column, header
    /// optional); minutes must be consecutive.
    pub fn read_csv<R: Read>(r: R) -> Result<Self> {
        let reader = BufReader::new(r);
        let mut start = None;
        let mut prev_minute = None;
        let mut values = Vec::new();
        let mut gaps = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let row = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let fields: Vec<&str> = trimmed.split(',').collect();
            if idx == 0 && fields[0].parse::<i64>().is_err() {
                continue; // header
            }
            if fields.len() < 2 || fields.len() > 3 {
                return Err(Error::Ingest { row, msg: format!("expected 2-3 columns, got {}", fields.len()) });
            }
            let minute: i64 = fields[0]
                .parse()
                .map_err(|e| Error::Ingest { row, msg: format!("bad minute_epoch: {e}") })?;
            let value: f64 = fields[1]
                .parse()
                .map_err(|e| Error::Ingest { row, msg: format!("bad value: {e}") })?;
            let gap = match fields.get(2) {
                Some(&"0") | None => false,
                Some(&"1") => true,
                Some(other) => {
                    return Err(Error::Ingest { row, msg: format!("bad is_gap flag {other:?}") })
                }
            };
            if let Some(prev) = prev_minute {
                if minute != prev + 1 {
                    return Err(Error::Ingest {
                        row,
                        msg: format!("non-consecutive minute {minute} after {prev}"),
                    });
                }
            } else {
                start = Some(minute);
            }
            prev_minute = Some(minute);
            values.push(value);
            gaps.push(gap);
        }
        let start = start.ok_or_else(|| Error::EmptyInput("series CSV has no data rows".into()))?;
        TimeSeries::new(start, values, gaps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_rejects_length_mismatch() {
        assert!(TimeSeries::new(0, vec![1.0, 2.0], vec![false]).is_err());
    }

    #[test]
    fn slice_preserves_timestamps() {
        let ts = TimeSeries::from_values(100, vec![1.0, 2.0, 3.0, 4.0]);
        let s = ts.slice(2..4).unwrap();
        assert_eq!(s.start_minute(), 102);
        assert_eq!(s.values(), &[3.0, 4.0]);
    }

    #[test]
    fn align_overlap_intersects_ranges() {
        let a = TimeSeries::from_values(10, vec![0.0; 6]); // minutes 10..16
        let b = TimeSeries::from_values(13, vec![1.0; 6]); // minutes 13..19
        let (a2, b2) = a.align_overlap(&b).unwrap();
        assert_eq!(a2.start_minute(), 13);
        assert_eq!(b2.start_minute(), 13);
        assert_eq!(a2.len(), 3);
        assert_eq!(b2.len(), 3);
    }

    #[test]
    fn align_overlap_disjoint_errors() {
        let a = TimeSeries::from_values(0, vec![0.0; 3]);
        let b = TimeSeries::from_values(10, vec![0.0; 3]);
        assert!(a.align_overlap(&b).is_err());
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let ts = TimeSeries::new(
            25_925_760,
            vec![0.1, -3.25e-6, 1.0 / 3.0, f64::MIN_POSITIVE],
            vec![false, true, false, false],
        )
        .unwrap();
        let mut buf = Vec::new();
        ts.write_csv(&mut buf).unwrap();
        let back = TimeSeries::read_csv(buf.as_slice()).unwrap();
        assert_eq!(back, ts);
    }

    #[test]
    fn csv_rejects_non_consecutive_minutes() {
        let data = "minute_epoch,value,is_gap\n5,1.0,0\n7,2.0,0\n";
        assert!(TimeSeries::read_csv(data.as_bytes()).is_err());
    }
}
