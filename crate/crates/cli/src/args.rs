//! Strict flag parsing: every flag must be declared, unknown flags are
//! errors, and error messages name the offending token.

use std::collections::BTreeMap;

#[derive(Clone, Copy)]
pub struct FlagSpec {
    pub name: &'static str,
    pub takes_value: bool,
}

pub struct Parsed {
    pub positional: Vec<String>,
    values: BTreeMap<String, String>,
    switches: Vec<String>,
}

impl Parsed {
    pub fn value(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(|s| s.as_str())
    }

    pub fn switch(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }
}

pub fn parse(args: &[String], spec: &[FlagSpec]) -> Result<Parsed, String> {
    let mut out = Parsed {
        positional: Vec::new(),
        values: BTreeMap::new(),
        switches: Vec::new(),
    };
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        if let Some(name) = arg.strip_prefix("--") {
            let (name, inline) = match name.split_once('=') {
                Some((n, v)) => (n, Some(v.to_string())),
                None => (name, None),
            };
            let flag = spec
                .iter()
                .find(|f| f.name == name)
                .ok_or_else(|| format!("unknown flag `--{}`", name))?;
            if flag.takes_value {
                let value = match inline {
                    Some(v) => v,
                    None => it
                        .next()
                        .ok_or_else(|| format!("flag `--{}` needs a value", name))?
                        .clone(),
                };
                if out.values.insert(name.to_string(), value).is_some() {
                    return Err(format!("flag `--{}` given twice", name));
                }
            } else {
                if inline.is_some() {
                    return Err(format!("flag `--{}` takes no value", name));
                }
                out.switches.push(name.to_string());
            }
        } else {
            out.positional.push(arg.clone());
        }
    }
    Ok(out)
}

pub fn int_flag(parsed: &Parsed, name: &str) -> Result<Option<i64>, String> {
    match parsed.value(name) {
        None => Ok(None),
        Some(v) => v
            .parse::<i64>()
            .map(Some)
            .map_err(|_| format!("flag `--{}` needs an integer, got `{}`", name, v)),
    }
}
