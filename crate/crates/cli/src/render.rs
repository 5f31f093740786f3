use std::str::FromStr;

use serde_json::{Map, Number, Value};
use subcount::CensusTable;

fn columns(table: &CensusTable) -> Vec<(&'static str, Vec<String>)> {
    let col = |f: &dyn Fn(&subcount::CensusRow) -> String| -> Vec<String> {
        table.rows.iter().map(f).collect()
    };
    let mut cols = vec![
        ("n", col(&|r| r.n.to_string())),
        ("M", col(&|r| r.subgroups.to_string())),
    ];
    if table.has_split() {
        cols.push(("M_plus", col(&|r| r.orientable.as_ref().expect("split").to_string())));
        cols.push(("M_minus", col(&|r| r.nonorientable.as_ref().expect("split").to_string())));
    }
    cols.push(("N", col(&|r| r.classes.to_string())));
    cols
}

/// Comma-separated with a header row and LF line endings.
pub fn csv(table: &CensusTable) -> String {
    let cols = columns(table);
    let mut out = cols.iter().map(|(name, _)| *name).collect::<Vec<_>>().join(",");
    out.push('\n');
    for i in 0..table.rows.len() {
        let line: Vec<&str> = cols.iter().map(|(_, vals)| vals[i].as_str()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// A JSON array with one object per row. Counts are bare JSON integers of
/// arbitrary size.
pub fn json(table: &CensusTable) -> String {
    let cols = columns(table);
    let rows: Vec<Value> = (0..table.rows.len())
        .map(|i| {
            let obj: Map<String, Value> = cols
                .iter()
                .map(|(name, vals)| {
                    let num = Number::from_str(&vals[i]).expect("decimal integer");
                    (name.to_string(), Value::Number(num))
                })
                .collect();
            Value::Object(obj)
        })
        .collect();
    let mut out = serde_json::to_string(&Value::Array(rows)).expect("serializable");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use subcount::census_table;

    #[test]
    fn csv_layout() {
        let t = census_table("free:2".parse().unwrap(), 2).unwrap();
        assert_eq!(csv(&t), "n,M,N\n1,1,1\n2,3,3\n");
        let t = census_table("nonorient:2".parse().unwrap(), 2).unwrap();
        assert_eq!(csv(&t), "n,M,M_plus,M_minus,N\n1,1,0,1,1\n2,3,1,2,3\n");
    }

    #[test]
    fn json_layout() {
        let t = census_table("orient:2".parse().unwrap(), 1).unwrap();
        assert_eq!(json(&t), "[{\"n\":1,\"M\":1,\"N\":1}]\n");
    }

    #[test]
    fn huge_values_stay_integral() {
        let t = census_table("orient:3".parse().unwrap(), 12).unwrap();
        let last = t.rows.last().unwrap().subgroups.to_string();
        assert!(last.len() > 20);
        assert!(json(&t).contains(&format!("\"M\":{last}")));
        assert!(csv(&t).contains(&last));
    }
}
