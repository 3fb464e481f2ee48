use critshare::analysis::AnalysisError;
use critshare::critical::CriticalError;
use critshare::document::DocumentError;
use critshare::latin::LatinError;
use critshare::lsss::LsssError;
use critshare::rsa::RsaError;

pub const USAGE: u8 = 1;
pub const VALIDATION: u8 = 2;
pub const BUDGET: u8 = 3;
pub const VERIFICATION: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: USAGE,
            message: message.into(),
        }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        Self {
            code: VALIDATION,
            message: message.into(),
        }
    }

    pub fn budget(message: impl Into<String>) -> Self {
        Self {
            code: BUDGET,
            message: message.into(),
        }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Self {
            code: VERIFICATION,
            message: message.into(),
        }
    }
}

impl From<LatinError> for Failure {
    fn from(e: LatinError) -> Self {
        match e {
            LatinError::BudgetExceeded { .. } => Failure::budget(e.to_string()),
            _ => Failure::validation(e.to_string()),
        }
    }
}

impl From<LsssError> for Failure {
    fn from(e: LsssError) -> Self {
        match e {
            LsssError::Latin(l) => l.into(),
            _ => Failure::validation(e.to_string()),
        }
    }
}

impl From<CriticalError> for Failure {
    fn from(e: CriticalError) -> Self {
        match e {
            CriticalError::Latin(l) => l.into(),
            _ => Failure::validation(e.to_string()),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Latin(l) => l.into(),
            DocumentError::Lsss(l) => l.into(),
            _ => Failure::validation(e.to_string()),
        }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Latin(l) => l.into(),
            AnalysisError::Lsss(l) => l.into(),
            _ => Failure::validation(e.to_string()),
        }
    }
}

impl From<RsaError> for Failure {
    fn from(e: RsaError) -> Self {
        match e {
            RsaError::InvalidShareIncluded(_) | RsaError::CombineFailed => Failure::verification(e.to_string()),
            _ => Failure::validation(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::validation(e.to_string())
    }
}
