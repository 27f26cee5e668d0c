//! On-disk cache of serialized idempotents, keyed by `(n, tableau, mode)`.

use std::fs;
use std::path::PathBuf;

use serde_json::Value;

use brauer_core::idempotent::Method;
use brauer_core::{FieldMode, UpdownTableau};

pub const ENV_VAR: &str = "BRAUER_CACHE_DIR";

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// The cache named by the environment, if any.
    pub fn from_env() -> Option<Self> {
        let dir = std::env::var_os(ENV_VAR)?;
        if dir.is_empty() {
            return None;
        }
        Some(Self { dir: dir.into() })
    }

    fn path(&self, t: &UpdownTableau, mode: FieldMode, method: Method) -> PathBuf {
        let mode = match mode {
            FieldMode::ExactOmega => "exact".to_string(),
            FieldMode::PrimeModular { prime, omega } => format!("p{prime}-w{omega}"),
        };
        let tab = t.to_string().replace('|', "_").replace(',', ".");
        let method = match method {
            Method::Recurrence => "recurrence",
            Method::Fusion => "fusion",
        };
        self.dir.join(format!("n{}-{mode}-{tab}-{method}.json", t.n()))
    }

    /// A stored entry, or `None` when missing or unreadable.
    pub fn load(&self, t: &UpdownTableau, mode: FieldMode, method: Method) -> Option<Value> {
        let text = fs::read_to_string(self.path(t, mode, method)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Best effort: a cache that cannot be written is silently skipped.
    pub fn store(&self, t: &UpdownTableau, mode: FieldMode, method: Method, v: &Value) {
        if fs::create_dir_all(&self.dir).is_err() {
            return;
        }
        let path = self.path(t, mode, method);
        let tmp = path.with_extension("json.tmp");
        if fs::write(&tmp, v.to_string()).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
}
