//! Minimal JSON emission with a fixed key order and floats rendered as
//! plain decimals with 12 significant digits, so identical inputs produce
//! byte-identical output.

/// Render a finite float as a plain decimal with up to 12 significant
/// digits, always keeping a fractional part.
pub fn fmt_f64(x: f64) -> String {
    debug_assert!(x.is_finite());
    if x == 0.0 {
        return "0.0".to_string();
    }
    let scientific = format!("{:.11e}", x.abs());
    let (mantissa, exponent) = scientific.split_once('e').unwrap();
    let exponent: i32 = exponent.parse().unwrap();
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    // the value is 0.<digits> * 10^point
    let point = exponent + 1;
    let mut out = String::new();
    if x < 0.0 {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..-point {
            out.push('0');
        }
        out.push_str(digits);
    } else if point as usize >= digits.len() {
        out.push_str(digits);
        for _ in 0..(point as usize - digits.len()) {
            out.push('0');
        }
        out.push_str(".0");
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    out
}

pub fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Ordered JSON object builder.
#[derive(Default)]
pub struct Obj {
    fields: Vec<String>,
}

impl Obj {
    pub fn new() -> Self {
        Obj::default()
    }

    pub fn raw(mut self, key: &str, value: impl AsRef<str>) -> Self {
        self.fields
            .push(format!("{}:{}", escape(key), value.as_ref()));
        self
    }

    pub fn str(self, key: &str, value: &str) -> Self {
        let quoted = escape(value);
        self.raw(key, quoted)
    }

    pub fn f64(self, key: &str, value: f64) -> Self {
        let rendered = fmt_f64(value);
        self.raw(key, rendered)
    }

    pub fn usize(self, key: &str, value: usize) -> Self {
        let rendered = value.to_string();
        self.raw(key, rendered)
    }

    pub fn u64(self, key: &str, value: u64) -> Self {
        let rendered = value.to_string();
        self.raw(key, rendered)
    }

    pub fn bool(self, key: &str, value: bool) -> Self {
        self.raw(key, if value { "true" } else { "false" })
    }

    pub fn finish(self) -> String {
        format!("{{{}}}", self.fields.join(","))
    }
}

pub fn array<I: IntoIterator<Item = String>>(items: I) -> String {
    let joined: Vec<String> = items.into_iter().collect();
    format!("[{}]", joined.join(","))
}
