//! Labeled Dyck paths of parking functions.
//!
//! For each spot `v = 1..=n` the path takes one north step per car preferring
//! `v` (labelled by those cars, increasing bottom to top) followed by one east
//! step.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::parking::PrefList;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    North,
    East,
}

impl Step {
    fn symbol(self) -> char {
        match self {
            Step::North => 'N',
            Step::East => 'E',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledDyckPath {
    steps: Vec<Step>,
    /// Car label of each north step, in path order.
    labels: Vec<usize>,
}

/// JSON shape of a path: `{"steps": "NENNEE...", "labels": [...]}`.
#[derive(Debug, Serialize)]
pub struct DyckJson {
    pub steps: String,
    pub labels: Vec<usize>,
}

impl LabeledDyckPath {
    pub fn new(steps: Vec<Step>, labels: Vec<usize>) -> Result<Self> {
        let invalid = |why: &str| Err(Error::Parse(format!("invalid labeled Dyck path: {why}")));
        let norths = steps.iter().filter(|&&s| s == Step::North).count();
        if steps.len() != 2 * norths || norths == 0 {
            return invalid("north and east step counts differ");
        }
        let mut surplus = 0isize;
        for &s in &steps {
            surplus += if s == Step::North { 1 } else { -1 };
            if surplus < 0 {
                return invalid("path dips below the diagonal");
            }
        }
        if labels.len() != norths {
            return invalid("one label per north step required");
        }
        let mut seen = vec![false; norths + 1];
        for &l in &labels {
            if l == 0 || l > norths || seen[l] {
                return invalid("labels must be a permutation");
            }
            seen[l] = true;
        }
        let path = LabeledDyckPath { steps, labels };
        if path
            .columns()
            .iter()
            .any(|c| c.windows(2).any(|w| w[0] > w[1]))
        {
            return invalid("labels must increase within a column");
        }
        Ok(path)
    }

    pub fn from_parking_function(prefs: &PrefList) -> Result<Self> {
        prefs.require_parking_function()?;
        let n = prefs.len();
        let mut by_spot: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (i, &a) in prefs.as_slice().iter().enumerate() {
            by_spot[a].push(i + 1);
        }
        let mut steps = Vec::with_capacity(2 * n);
        let mut labels = Vec::with_capacity(n);
        for cars in by_spot.into_iter().skip(1) {
            for car in cars {
                steps.push(Step::North);
                labels.push(car);
            }
            steps.push(Step::East);
        }
        Ok(LabeledDyckPath { steps, labels })
    }

    pub fn semilength(&self) -> usize {
        self.labels.len()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| s.symbol()).collect()
    }

    /// Labels of the north run preceding each east step, one entry per column.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let mut cols = Vec::with_capacity(self.semilength());
        let mut current = Vec::new();
        let mut labels = self.labels.iter();
        for &s in &self.steps {
            match s {
                Step::North => current.push(*labels.next().expect("label per north step")),
                Step::East => cols.push(std::mem::take(&mut current)),
            }
        }
        cols
    }

    /// Number of east steps taken at each return to the diagonal.
    pub fn returns(&self) -> Vec<usize> {
        let (mut north, mut east) = (0usize, 0usize);
        let mut out = Vec::new();
        for &s in &self.steps {
            match s {
                Step::North => north += 1,
                Step::East => {
                    east += 1;
                    if north == east {
                        out.push(east);
                    }
                }
            }
        }
        out
    }

    /// `max_k (#north steps before the k-th east step - k)`: 0 for the staircase.
    pub fn height(&self) -> usize {
        let (mut north, mut east) = (0usize, 0usize);
        let mut height = 0;
        for &s in &self.steps {
            match s {
                Step::North => north += 1,
                Step::East => {
                    east += 1;
                    height = height.max(north.saturating_sub(east));
                }
            }
        }
        height
    }

    /// North-step labels grouped by the segments between returns to the diagonal.
    pub fn component_labels(&self) -> Vec<Vec<usize>> {
        let (mut north, mut east) = (0usize, 0usize);
        let mut labels = self.labels.iter();
        let mut out = Vec::new();
        let mut current = Vec::new();
        for &s in &self.steps {
            match s {
                Step::North => {
                    north += 1;
                    current.push(*labels.next().expect("label per north step"));
                }
                Step::East => {
                    east += 1;
                    if north == east {
                        out.push(std::mem::take(&mut current));
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> DyckJson {
        DyckJson {
            steps: self.step_string(),
            labels: self.labels.clone(),
        }
    }

    /// Grid drawing, top row first. Row `r` holds north step `r`: `[l]` marks the
    /// step with its label `l`, `.` a cell strictly between path and diagonal,
    /// `\` the diagonal cell.
    pub fn render_ascii(&self) -> String {
        let n = self.semilength();
        let width = n.to_string().len() + 2;
        // column (0-based x) of every north step
        let mut step_cols = Vec::with_capacity(n);
        let mut x = 0;
        for &s in &self.steps {
            match s {
                Step::North => step_cols.push(x),
                Step::East => x += 1,
            }
        }
        let mut out = String::new();
        for r in (0..n).rev() {
            let col = step_cols[r];
            let mut line = String::new();
            for cx in 0..n.max(r + 1) {
                let cell = if cx == col {
                    format!("[{}]", self.labels[r])
                } else if cx < col {
                    String::new()
                } else if cx < r {
                    ".".to_string()
                } else if cx == r {
                    "\\".to_string()
                } else {
                    break;
                };
                let _ = write!(line, "{cell:^width$}");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for LabeledDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.step_string())
    }
}

pub fn pf_to_labeled_dyck(prefs: &PrefList) -> Result<LabeledDyckPath> {
    LabeledDyckPath::from_parking_function(prefs)
}

pub fn dyck_height(path: &LabeledDyckPath) -> usize {
    path.height()
}

/// Height at most one and strictly increasing labels inside every component.
pub fn is_upf_via_dyck(prefs: &PrefList) -> Result<bool> {
    let path = pf_to_labeled_dyck(prefs)?;
    Ok(path.height() <= 1
        && path
            .component_labels()
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1])))
}
