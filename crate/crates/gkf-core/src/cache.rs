//! On-disk cache for invariant bases, keyed by (n, weight, degree, min_gen,
//! cache version). Files wrap the sparse-vector text serialization with a
//! header identifying the slice, so a cache written against a different
//! basis enumeration is rejected instead of silently reused.

use std::fs;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::cochain::ComplexSlice;
use crate::linalg::{LinalgError, SparseVector};

/// Bump when the basis enumeration or normalization changes.
pub const CACHE_VERSION: &str = "v1";

const MAGIC: &str = "gkf-invariant-basis";

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("corrupt cache file: {0}")]
    Corrupt(String),
    #[error("corrupt cache file: {0}")]
    Vector(#[from] LinalgError),
}

impl CacheError {
    pub fn corrupt(msg: impl Into<String>) -> Self {
        CacheError::Corrupt(msg.into())
    }
}

#[derive(Clone, Debug)]
pub struct BasisCache {
    dir: PathBuf,
}

impl BasisCache {
    pub fn new(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(BasisCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn file_for(&self, s: &ComplexSlice) -> PathBuf {
        self.dir.join(format!(
            "inv-n{}-w{}-m{}-g{}-{}.txt",
            s.n(),
            s.weight(),
            s.degree(),
            s.min_gen(),
            CACHE_VERSION
        ))
    }

    pub fn contains(&self, s: &ComplexSlice) -> bool {
        self.file_for(s).is_file()
    }

    /// Loads the cached basis, or `None` when the file does not exist.
    pub fn load(&self, s: &ComplexSlice) -> Result<Option<Vec<SparseVector>>, CacheError> {
        let path = self.file_for(s);
        let file = match fs::File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut r = BufReader::new(file);
        let mut header = String::new();
        r.read_line(&mut header)?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let expect = [
            MAGIC.to_string(),
            CACHE_VERSION.to_string(),
            s.n().to_string(),
            s.weight().to_string(),
            s.degree().to_string(),
            s.min_gen().to_string(),
            s.dim().to_string(),
        ];
        if fields.len() != 8 || fields[..7] != expect {
            return Err(CacheError::corrupt(format!(
                "header mismatch in {}",
                path.display()
            )));
        }
        let count: usize = fields[7]
            .parse()
            .map_err(|_| CacheError::corrupt("bad vector count"))?;
        let mut vectors = Vec::with_capacity(count);
        for _ in 0..count {
            let v = SparseVector::read_text(&mut r)?;
            if v.dim() != s.dim() {
                return Err(CacheError::corrupt("vector dimension mismatch"));
            }
            vectors.push(v);
        }
        Ok(Some(vectors))
    }

    pub fn store(&self, s: &ComplexSlice, vectors: &[SparseVector]) -> Result<(), CacheError> {
        let path = self.file_for(s);
        let tmp = path.with_extension("txt.tmp");
        {
            let mut w = BufWriter::new(fs::File::create(&tmp)?);
            writeln!(
                w,
                "{} {} {} {} {} {} {} {}",
                MAGIC,
                CACHE_VERSION,
                s.n(),
                s.weight(),
                s.degree(),
                s.min_gen(),
                s.dim(),
                vectors.len()
            )?;
            for v in vectors {
                assert_eq!(v.dim(), s.dim());
                v.write_text(&mut w)?;
            }
            w.flush()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::slice;
    use crate::linalg::rat;

    #[test]
    fn round_trip_and_corruption_detection() {
        let dir = std::env::temp_dir().join(format!("gkf-cache-test-{}", std::process::id()));
        let cache = BasisCache::new(&dir).unwrap();
        let s = slice(2, 2, 2, 3).unwrap();
        assert!(cache.load(&s).unwrap().is_none());

        let v = SparseVector::from_entries(s.dim(), [(3, rat(2)), (17, rat(-5))]);
        cache.store(&s, std::slice::from_ref(&v)).unwrap();
        assert!(cache.contains(&s));
        let back = cache.load(&s).unwrap().unwrap();
        assert_eq!(back, vec![v]);

        // clobber the header
        let path = dir.join(format!("inv-n2-w2-m2-g3-{CACHE_VERSION}.txt"));
        std::fs::write(&path, "garbage 1 2 3\n").unwrap();
        assert!(cache.load(&s).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
