use std::fmt;

use thiserror::Error;

/// Grade of an extensor: 0 scalar, 1 point, 2 line, 3 the whole plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Scalar,
    Point,
    Line,
    Top,
}

impl Step {
    pub fn grade(self) -> u8 {
        match self {
            Step::Scalar => 0,
            Step::Point => 1,
            Step::Line => 2,
            Step::Top => 3,
        }
    }

    pub fn from_grade(grade: u8) -> Option<Step> {
        match grade {
            0 => Some(Step::Scalar),
            1 => Some(Step::Point),
            2 => Some(Step::Line),
            3 => Some(Step::Top),
            _ => None,
        }
    }

    /// Step of a join: grades add and must stay within 3.
    pub fn join(self, other: Step) -> Result<Step, StepError> {
        Step::from_grade(self.grade() + other.grade()).ok_or(StepError::JoinOverflow {
            left: self,
            right: other,
        })
    }

    /// Step of a meet: `j + k - 3`, which must be non-negative.
    pub fn meet(self, other: Step) -> Result<Step, StepError> {
        let total = self.grade() + other.grade();
        total
            .checked_sub(3)
            .and_then(Step::from_grade)
            .ok_or(StepError::MeetUnderflow {
                left: self,
                right: other,
            })
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}", self.grade())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("join of {left} and {right} exceeds step 3")]
    JoinOverflow { left: Step, right: Step },
    #[error("meet of {left} and {right} falls below step 0")]
    MeetUnderflow { left: Step, right: Step },
}
