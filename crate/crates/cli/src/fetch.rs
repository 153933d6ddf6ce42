//! Conversion of the TEI sonnet dataset into the `<root>/<poet>/*.txt` layout.

use std::path::{Path, PathBuf};
use std::process::Command;

use log::{info, warn};
use philotope::corpus::PoetId;
use quick_xml::events::Event;
use quick_xml::Reader;

use crate::error::{read_text, write_text, CliError};

pub const DATASET_URL: &str = "https://github.com/bncolorado/CorpusSonetosSigloDeOro";

/// Shallow clone of `url` into `dest` with the system `git`.
pub fn clone(url: &str, dest: &Path) -> Result<(), CliError> {
    info!("cloning {url}");
    let status = Command::new("git")
        .args(["clone", "--depth", "1", url])
        .arg(dest)
        .status()
        .map_err(|e| CliError::Data(format!("cannot run git: {e}")))?;
    if !status.success() {
        return Err(CliError::Data(format!("git clone {url} failed ({status})")));
    }
    Ok(())
}

/// Lowercase ASCII folding, so `Góngora` matches `gongora`.
fn fold(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            'á' | 'à' | 'Á' => 'a',
            'é' | 'É' => 'e',
            'í' | 'Í' => 'i',
            'ó' | 'Ó' => 'o',
            'ú' | 'ü' | 'Ú' => 'u',
            'ñ' | 'Ñ' => 'n',
            c => c.to_ascii_lowercase(),
        })
        .collect()
}

fn xml_files(dir: &Path, out: &mut Vec<PathBuf>) -> std::io::Result<()> {
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.file_name().is_some_and(|n| n == ".git") {
            continue;
        }
        if path.is_dir() {
            xml_files(&path, out)?;
        } else if path.extension().is_some_and(|e| e == "xml") {
            out.push(path);
        }
    }
    Ok(())
}

/// Verses of each `<text>` element of a TEI document; `<l>` elements are
/// verses. A document without `<text>` counts as a single sonnet.
pub fn sonnets_from_tei(xml: &str) -> Result<Vec<Vec<String>>, String> {
    let mut reader = Reader::from_str(xml);
    let mut sonnets = Vec::new();
    let mut current: Vec<String> = Vec::new();
    let mut verse: Option<String> = None;
    loop {
        match reader.read_event().map_err(|e| format!("at byte {}: {e}", reader.buffer_position()))? {
            Event::Start(e) if e.local_name().as_ref() == b"l" => verse = Some(String::new()),
            Event::End(e) if e.local_name().as_ref() == b"l" => {
                if let Some(v) = verse.take() {
                    let v = v.split_whitespace().collect::<Vec<_>>().join(" ");
                    if !v.is_empty() {
                        current.push(v);
                    }
                }
            }
            Event::End(e) if e.local_name().as_ref() == b"text" => {
                if !current.is_empty() {
                    sonnets.push(std::mem::take(&mut current));
                }
            }
            Event::Text(t) => {
                if let Some(v) = verse.as_mut() {
                    v.push_str(&t.unescape().map_err(|e| e.to_string())?);
                }
            }
            Event::Eof => break,
            _ => {}
        }
    }
    if !current.is_empty() {
        sonnets.push(current);
    }
    Ok(sonnets)
}

/// Writes every sonnet of the XML files under `source` whose path names a
/// poet into `<root>/<poet>/NNNN.txt`, numbered in path order. Returns the
/// count per poet.
pub fn convert(source: &Path, root: &Path, poets: &[PoetId]) -> Result<Vec<usize>, CliError> {
    let mut files = Vec::new();
    xml_files(source, &mut files).map_err(|e| CliError::Data(format!("cannot scan {}: {e}", source.display())))?;
    files.sort();
    let mut counts = Vec::with_capacity(poets.len());
    for poet in poets {
        let key = fold(poet.as_str());
        let dir = root.join(poet.as_str());
        let mut n = 0usize;
        for f in files.iter().filter(|f| fold(&f.to_string_lossy()).contains(&key)) {
            let sonnets = sonnets_from_tei(&read_text(f)?).map_err(|e| CliError::Data(format!("{}: {e}", f.display())))?;
            for s in sonnets {
                n += 1;
                write_text(&dir.join(format!("{n:04}.txt")), &(s.join("\n") + "\n"))?;
            }
        }
        if n == 0 {
            warn!("no sonnets found for {poet} under {}", source.display());
        }
        counts.push(n);
    }
    Ok(counts)
}
