use codescope_core::corpus::{CorpusManifest, ManifestRecord};
use codescope_core::extractor::{extract_inner_comments, extract_methods, SourceFile};

/// A Java class whose single method carries `n` comments, each followed by
/// one statement.
pub fn class_with_comments(name: &str, n: usize) -> String {
    let mut body = String::new();
    for i in 0..n {
        body.push_str(&format!("        // step {i} of the work\n        call{i}();\n"));
    }
    format!("public class {name} {{\n    void run{name}() {{\n{body}    }}\n}}\n")
}

pub fn manifest(files: &[(&str, String)]) -> CorpusManifest {
    let mut records = Vec::new();
    for (path, content) in files {
        let file = SourceFile::new("proj", *path, content.clone());
        for m in extract_methods(&file).unwrap() {
            let cs = extract_inner_comments(&m).unwrap();
            records.push(ManifestRecord::from_method(&m, &cs));
        }
    }
    CorpusManifest {
        records,
        files: files.len(),
        ..CorpusManifest::default()
    }
}

#[allow(dead_code)]
pub fn pool() -> Vec<String> {
    ["ann1", "ann2", "ann3", "ann4"].iter().map(|s| s.to_string()).collect()
}
