use serde::{Deserialize, Serialize};

/// How many witnesses a report keeps per violated property.
pub const MAX_WITNESSES: usize = 8;

/// Count of violations of one property plus the first few witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violations<T> {
    pub count: usize,
    pub witnesses: Vec<T>,
}

impl<T> Default for Violations<T> {
    fn default() -> Self {
        Violations {
            count: 0,
            witnesses: Vec::new(),
        }
    }
}

impl<T> Violations<T> {
    pub fn push(&mut self, witness: T) {
        self.count += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn merge(&mut self, other: Violations<T>) {
        self.count += other.count;
        let room = MAX_WITNESSES.saturating_sub(self.witnesses.len());
        self.witnesses
            .extend(other.witnesses.into_iter().take(room));
    }
}

impl<T> FromIterator<T> for Violations<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut v = Violations::default();
        for w in iter {
            v.push(w);
        }
        v
    }
}
