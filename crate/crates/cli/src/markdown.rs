//! Markdown rendering of command results, with the eight-degree group
//! tables laid out in two columns of four degrees.

use crate::model::{FmCandidateDoc, GroupDoc};

pub fn key_values(title: &str, pairs: &[(&str, String)]) -> String {
    let mut out = format!("## {title}\n\n");
    for (k, v) in pairs {
        out.push_str(&format!("- **{k}**: {v}\n"));
    }
    out
}

/// Two-column degree table: degrees 0-3 on the left, 4-7 on the right.
pub fn degree_table(heading: &str, label: &str, groups: &[GroupDoc]) -> String {
    assert_eq!(groups.len(), 8);
    let mut out = format!("## {heading}\n\n");
    out.push_str(&format!("| j | {label} | j | {label} |\n"));
    out.push_str("|---|---|---|---|\n");
    for j in 0..4 {
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            j,
            groups[j].display,
            j + 4,
            groups[j + 4].display
        ));
    }
    out
}

pub fn fm_candidate_table(c: &FmCandidateDoc) -> String {
    let mut out = format!(
        "### Candidate {} (degree offset {}) - {}\n\n",
        c.candidate,
        c.degree_offset,
        if c.pass { "pass" } else { "FAIL" }
    );
    out.push_str("| j | source | j' | target | equal |\n|---|---|---|---|---|\n");
    for row in &c.degrees {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            row.j,
            row.source.display,
            row.target_degree,
            row.target.display,
            if row.equal { "yes" } else { "NO" }
        ));
    }
    out
}
