//! `key = value` configuration files.
//!
//! Keys are long flag names without the leading dashes (`lambda-range`,
//! `workers`, ...). Blank lines and `#` comments are ignored. A value of
//! `true` turns on a switch, `false` leaves it off. The entries are spliced in
//! front of the command-line flags so that flags given explicitly win.

/// Parses config text into `(key, value)` pairs. `Err` lists every malformed
/// line.
pub fn parse(text: &str) -> Result<Vec<(String, String)>, Vec<String>> {
    let mut entries = Vec::new();
    let mut problems = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split_once('#').map_or(raw, |(before, _)| before).trim();
        if line.is_empty() {
            continue;
        }
        match line.split_once('=') {
            Some((key, value)) => {
                let key = key.trim().trim_start_matches("--");
                let value = value.trim();
                if key.is_empty() || key.contains(char::is_whitespace) {
                    problems.push(format!("config line {}: bad key `{}`", i + 1, key));
                } else if key == "config" {
                    problems.push(format!(
                        "config line {}: nested `config` is not allowed",
                        i + 1
                    ));
                } else {
                    entries.push((key.to_string(), value.to_string()));
                }
            }
            None => problems.push(format!(
                "config line {}: expected `key = value`, got `{}`",
                i + 1,
                line
            )),
        }
    }
    if problems.is_empty() {
        Ok(entries)
    } else {
        Err(problems)
    }
}

/// Flag form of the entries.
pub fn to_args(entries: &[(String, String)]) -> Vec<String> {
    let mut args = Vec::new();
    for (key, value) in entries {
        match value.as_str() {
            "true" => args.push(format!("--{key}")),
            "false" => {}
            _ => {
                args.push(format!("--{key}"));
                args.push(value.clone());
            }
        }
    }
    args
}
