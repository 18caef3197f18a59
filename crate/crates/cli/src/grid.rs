//! `--set name=value` and `--sweep name=min:max:count` parsing.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Axis {
    Fixed(f64),
    Linspace { min: f64, max: f64, count: usize },
}

impl Axis {
    pub fn values(&self) -> Vec<f64> {
        match *self {
            Axis::Fixed(v) => vec![v],
            Axis::Linspace { min, count: 1, .. } => vec![min],
            Axis::Linspace { min, max, count } => {
                let step = (max - min) / (count - 1) as f64;
                (0..count).map(|n| if n + 1 == count { max } else { min + step * n as f64 }).collect()
            }
        }
    }
}

/// Parameter axes in the model's canonical order, plus the order in which
/// swept axes were given (first is slowest).
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub names: Vec<&'static str>,
    pub axes: Vec<Axis>,
    pub sweep_order: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn number(s: &str, what: &str) -> Result<f64, UsageError> {
    let v: f64 = s.trim().parse().map_err(|_| UsageError(format!("cannot parse {what} `{s}`")))?;
    if !v.is_finite() {
        return Err(UsageError(format!("{what} `{s}` is not finite")));
    }
    Ok(v)
}

fn split_assignment(s: &str) -> Result<(&str, &str), UsageError> {
    s.split_once('=').map(|(a, b)| (a.trim(), b.trim())).ok_or_else(|| UsageError(format!("expected name=value, got `{s}`")))
}

impl GridSpec {
    pub fn parse(names: &'static [&'static str], sets: &[String], sweeps: &[String]) -> Result<Self, UsageError> {
        let mut axes: Vec<Option<Axis>> = vec![None; names.len()];
        let index = |name: &str| {
            names
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| UsageError(format!("unknown parameter `{name}` (expected one of {})", names.join(", "))))
        };
        let place = |axes: &mut Vec<Option<Axis>>, i: usize, a: Axis| {
            if axes[i].is_some() {
                return Err(UsageError(format!("parameter `{}` given twice", names[i])));
            }
            axes[i] = Some(a);
            Ok(())
        };
        for item in sets.iter().flat_map(|s| s.split(',')).filter(|s| !s.trim().is_empty()) {
            let (name, value) = split_assignment(item)?;
            let i = index(name)?;
            place(&mut axes, i, Axis::Fixed(number(value, name)?))?;
        }
        let mut sweep_order = Vec::new();
        for item in sweeps {
            let (name, spec) = split_assignment(item)?;
            let i = index(name)?;
            let parts: Vec<&str> = spec.split(':').collect();
            let [min, max, count] = parts[..] else {
                return Err(UsageError(format!("sweep `{item}` is not name=min:max:count")));
            };
            let count: usize = count.trim().parse().map_err(|_| UsageError(format!("bad count in `{item}`")))?;
            if count == 0 {
                return Err(UsageError(format!("sweep `{item}` has zero points")));
            }
            place(&mut axes, i, Axis::Linspace { min: number(min, name)?, max: number(max, name)?, count })?;
            sweep_order.push(i);
        }
        if sweep_order.is_empty() {
            return Err(UsageError("at least one --sweep is required".into()));
        }
        let axes = axes
            .into_iter()
            .enumerate()
            .map(|(i, a)| a.ok_or_else(|| UsageError(format!("parameter `{}` needs --set or --sweep", names[i]))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { names: names.to_vec(), axes, sweep_order })
    }

    /// All grid points, row-major over the sweep axes in the order given.
    pub fn points(&self) -> Vec<Vec<f64>> {
        let base: Vec<f64> = self.axes.iter().map(|a| a.values()[0]).collect();
        let mut out = vec![base];
        for &i in &self.sweep_order {
            let vals = self.axes[i].values();
            out = out
                .into_iter()
                .flat_map(|p| {
                    vals.iter().map(move |&v| {
                        let mut q = p.clone();
                        q[i] = v;
                        q
                    })
                })
                .collect();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NAMES: &[&str] = &["X", "Y", "Z"];

    #[test]
    fn linspace_hits_both_ends() {
        let a = Axis::Linspace { min: 1.0, max: 2.0, count: 3 };
        assert_eq!(a.values(), vec![1.0, 1.5, 2.0]);
        assert_eq!(Axis::Linspace { min: 0.0, max: 1.0, count: 1 }.values(), vec![0.0]);
    }

    #[test]
    fn row_major_order() {
        let g = GridSpec::parse(NAMES, &["Y=0".into()], &["Z=1:2:2".into(), "X=1:3:3".into()]).unwrap();
        let p = g.points();
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![1.0, 0.0, 1.0]);
        assert_eq!(p[1], vec![2.0, 0.0, 1.0]);
        assert_eq!(p[3], vec![1.0, 0.0, 2.0]);
    }

    #[test]
    fn usage_errors() {
        assert!(GridSpec::parse(NAMES, &["Y=0,Z=1".into()], &[]).is_err());
        assert!(GridSpec::parse(NAMES, &["Y=0".into()], &["X=1:2:2".into()]).is_err());
        assert!(GridSpec::parse(NAMES, &["Y=0,Z=1,Q=2".into()], &["X=1:2:2".into()]).is_err());
        assert!(GridSpec::parse(NAMES, &["Y=0,Z=1".into()], &["X=1:2".into()]).is_err());
        assert!(GridSpec::parse(NAMES, &["X=0,Y=0,Z=1".into()], &["X=1:2:2".into()]).is_err());
    }
}
