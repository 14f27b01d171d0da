//! Run reports and their JSON / CSV renderings.
//!
//! Floating-point values are always written with 17 significant digits so that
//! identical runs produce byte-identical output.

use serde_json::{Map, Number, Value};

/// Formats a float with 17 significant digits, or `NaN` / `inf` / `-inf`.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        // adding +0.0 folds -0.0 into 0.0
        let s = format!("{:.16e}", x + 0.0);
        match s.split_once('e') {
            Some((mantissa, exp)) if !exp.starts_with('-') => format!("{mantissa}e+{exp}"),
            _ => s,
        }
    } else if x.is_nan() {
        "NaN".to_owned()
    } else if x > 0.0 {
        "inf".to_owned()
    } else {
        "-inf".to_owned()
    }
}

pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(fmt_f64(x).parse::<Number>().expect("formatted float is valid JSON"))
}

pub fn vec3(v: [f64; 3]) -> Value {
    Value::Array(v.iter().map(|&c| num(c)).collect())
}

/// A single table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Num(x) => fmt_f64(*x),
            Cell::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Num(x) => num(*x),
            Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Whether the JSON rendering embeds the rows; large tables are CSV only.
    pub in_json: bool,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
            in_json: true,
        }
    }

    pub fn to_csv(&self) -> std::io::Result<Vec<u8>> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_csv))?;
        }
        w.into_inner().map_err(|e| e.into_error())
    }
}

/// One verified relation.
#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub name: String,
    /// Identifier of the relation being checked.
    pub check: &'static str,
    pub passed: bool,
    pub values: Vec<(&'static str, Value)>,
}

impl Case {
    pub fn new(name: impl Into<String>, check: &'static str, passed: bool) -> Self {
        Case {
            name: name.into(),
            check,
            passed,
            values: Vec::new(),
        }
    }

    pub fn with(mut self, key: &'static str, value: Value) -> Self {
        self.values.push((key, value));
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: Vec<String>,
    pub seed: u64,
    pub tolerances: Vec<(&'static str, f64)>,
    pub cases: Vec<Case>,
    pub table: Option<Table>,
}

impl RunReport {
    pub fn new(command: Vec<String>, seed: u64, tol: f64) -> Self {
        RunReport {
            command,
            seed,
            tolerances: vec![("tol", tol)],
            cases: Vec::new(),
            table: None,
        }
    }

    pub fn push(&mut self, case: Case) {
        self.cases.push(case);
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert("command".into(), Value::from(self.command.clone()));
        root.insert("seed".into(), Value::from(self.seed));
        let tolerances: Map<String, Value> = self.tolerances.iter().map(|&(k, v)| (k.to_owned(), num(v))).collect();
        root.insert("tolerances".into(), Value::Object(tolerances));
        let cases = self
            .cases
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("name".into(), Value::from(c.name.as_str()));
                m.insert("check".into(), Value::from(c.check));
                m.insert("passed".into(), Value::from(c.passed));
                let values: Map<String, Value> = c.values.iter().map(|(k, v)| ((*k).to_owned(), v.clone())).collect();
                m.insert("values".into(), Value::Object(values));
                Value::Object(m)
            })
            .collect();
        root.insert("cases".into(), Value::Array(cases));
        if let Some(table) = self.table.as_ref().filter(|t| t.in_json) {
            let mut t = Map::new();
            t.insert("columns".into(), Value::from(table.columns.clone()));
            let rows = table
                .rows
                .iter()
                .map(|r| Value::Array(r.iter().map(Cell::to_json).collect()))
                .collect();
            t.insert("rows".into(), Value::Array(rows));
            root.insert("table".into(), Value::Object(t));
        }
        let failed = self.cases.iter().filter(|c| !c.passed).count();
        let mut summary = Map::new();
        summary.insert("cases".into(), Value::from(self.cases.len()));
        summary.insert("passed".into(), Value::from(self.cases.len() - failed));
        summary.insert("failed".into(), Value::from(failed));
        summary.insert("status".into(), Value::from(if failed == 0 { "pass" } else { "fail" }));
        root.insert("summary".into(), Value::Object(summary));
        Value::Object(root)
    }

    /// The command's table if it has one, otherwise one row per case quantity.
    pub fn to_csv(&self) -> std::io::Result<Vec<u8>> {
        if let Some(table) = &self.table {
            return table.to_csv();
        }
        let mut t = Table::new(vec!["case", "check", "passed", "quantity", "value"]);
        for c in &self.cases {
            for (k, v) in &c.values {
                let value = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                t.rows.push(vec![
                    Cell::Text(c.name.clone()),
                    Cell::Text(c.check.to_owned()),
                    Cell::Text(c.passed.to_string()),
                    Cell::Text((*k).to_owned()),
                    Cell::Text(value),
                ]);
            }
        }
        t.to_csv()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(fmt_f64(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_f64(1.0), "1.0000000000000000e+0");
        assert_eq!(fmt_f64(-0.0), "0.0000000000000000e+0");
        assert_eq!(num(0.5).to_string(), "5.0000000000000000e-1");
        assert_eq!(num(f64::NAN), Value::Null);
    }

    #[test]
    fn round_trip_is_exact() {
        for x in [0.1, 1.0 / 3.0, std::f64::consts::PI, 1e-300, -2.5e17] {
            assert_eq!(fmt_f64(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn json_field_order_is_fixed() {
        let mut r = RunReport::new(vec!["x".into()], 7, 1e-12);
        r.push(Case::new("a", "k", true).with("z", num(1.0)).with("a", num(2.0)));
        let s = r.to_json().to_string();
        let order = ["\"command\"", "\"seed\"", "\"tolerances\"", "\"cases\"", "\"summary\""];
        let pos: Vec<usize> = order.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(s.find("\"z\"").unwrap() < s.find("\"a\":").unwrap());
    }

    #[test]
    fn csv_has_header_even_when_empty() {
        let t = Table::new(vec!["omega_start", "omega_end"]);
        assert_eq!(
            String::from_utf8(t.to_csv().unwrap()).unwrap(),
            "omega_start,omega_end\n"
        );
    }
}
