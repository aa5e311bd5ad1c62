//! Class and package metrics over a detected [`OOModel`]: NOC, per-class
//! NOM / NOA / children / DIT, and per-package aggregates.
//!
//! DIT is the edge count of the superclass chain, so a root class has
//! DIT 0 (the Chidamber-Kemerer convention). Inheritance is single-parent
//! here, which makes DIT the unique chain length rather than a maximum
//! over paths. Packages are defining files: a class's members always
//! aggregate to the file that defines the class, even when prototype
//! assignments appear elsewhere.

use crate::ast::Program;
use crate::detect::OOModel;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

/// Metric values for one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMetrics {
    /// Class name.
    pub class_name: String,
    /// Number of methods.
    pub nom: u32,
    /// Number of attributes.
    pub noa: u32,
    /// Number of direct subclasses.
    pub children_count: u32,
    /// Depth of inheritance tree; 0 for a class with no superclass.
    pub dit: u32,
}

/// Aggregates for one package (source file).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PackageMetrics {
    /// Classes defined in the file.
    pub class_count: u32,
    /// Methods over those classes.
    pub method_count: u32,
    /// Attributes over those classes.
    pub attribute_count: u32,
    /// Lines with code content.
    pub loc: u32,
    /// Physical lines.
    pub raw_line_count: u32,
}

/// The full metric suite for one analyzed program.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MetricsReport {
    /// Number of classes.
    pub noc: u32,
    /// Sum of per-class NOM.
    pub total_methods: u64,
    /// Sum of per-class NOA.
    pub total_attributes: u64,
    /// Sum of per-file LOC (code lines).
    pub total_loc: u64,
    /// Sum of per-file physical lines.
    pub total_raw_lines: u64,
    /// Per-class metrics, name-sorted.
    pub per_class: Vec<ClassMetrics>,
    /// Per-file aggregates; includes files that define no classes.
    pub per_package: BTreeMap<String, PackageMetrics>,
}

/// Computes the metric suite. Pure: identical inputs yield identical
/// reports.
pub fn compute_metrics(model: &OOModel, program: &Program) -> MetricsReport {
    let mut dit_cache: BTreeMap<&str, u32> = BTreeMap::new();
    fn dit_of<'a>(name: &'a str, model: &'a OOModel, cache: &mut BTreeMap<&'a str, u32>) -> u32 {
        if let Some(&d) = cache.get(name) {
            return d;
        }
        // The model is acyclic with ≤1 superclass, so the chain terminates.
        let d = match model
            .classes
            .get(name)
            .and_then(|c| c.superclass.as_deref())
        {
            Some(parent) => dit_of(parent, model, cache) + 1,
            None => 0,
        };
        cache.insert(name, d);
        d
    }

    let mut per_class = Vec::with_capacity(model.classes.len());
    for (name, class) in &model.classes {
        per_class.push(ClassMetrics {
            class_name: name.clone(),
            nom: class.methods.len() as u32,
            noa: class.attributes.len() as u32,
            children_count: class.children.len() as u32,
            dit: dit_of(name, model, &mut dit_cache),
        });
    }

    let mut per_package: BTreeMap<String, PackageMetrics> = BTreeMap::new();
    for file in &program.files {
        per_package.insert(
            file.path.clone(),
            PackageMetrics {
                loc: file.loc,
                raw_line_count: file.raw_line_count,
                ..PackageMetrics::default()
            },
        );
    }
    for class in model.classes.values() {
        let entry = per_package.entry(class.file.clone()).or_default();
        entry.class_count += 1;
        entry.method_count += class.methods.len() as u32;
        entry.attribute_count += class.attributes.len() as u32;
    }

    MetricsReport {
        noc: model.classes.len() as u32,
        total_methods: model.classes.values().map(|c| c.methods.len() as u64).sum(),
        total_attributes: model
            .classes
            .values()
            .map(|c| c.attributes.len() as u64)
            .sum(),
        total_loc: program.total_loc,
        total_raw_lines: program.total_raw_lines,
        per_class,
        per_package,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::Program;
    use crate::detect::detect;
    use crate::parser::parse_source;

    fn analyzed(sources: &[(&str, &str)]) -> (OOModel, Program) {
        let files = sources
            .iter()
            .map(|(path, src)| parse_source(src, path).expect("parses").0)
            .collect();
        let program = Program::assemble(files);
        let model = detect(&program);
        (model, program)
    }

    fn class<'a>(report: &'a MetricsReport, name: &str) -> &'a ClassMetrics {
        report
            .per_class
            .iter()
            .find(|c| c.class_name == name)
            .expect("class present")
    }

    #[test]
    fn listing_style_metrics() {
        let (model, program) = analyzed(&[(
            "listing1.js",
            "function Mammal(name) {\n\tthis.name=name;\n}\nMammal.prototype.toString=function(){\n\treturn '['+this.name+']';\n}\nCat.prototype = Object.create(Mammal.prototype);\nfunction Cat(name) {\n\tthis.name='\"meow\" ' + name;\n}\nvar animal = new Mammal('x');\nvar myPet = new Cat('y');\n",
        )]);
        let report = compute_metrics(&model, &program);
        assert_eq!(report.noc, 2);
        let mammal = class(&report, "Mammal");
        assert_eq!(
            (mammal.nom, mammal.noa, mammal.children_count, mammal.dit),
            (1, 1, 1, 0)
        );
        let cat = class(&report, "Cat");
        assert_eq!(
            (cat.nom, cat.noa, cat.children_count, cat.dit),
            (0, 1, 0, 1)
        );
        assert_eq!(report.total_methods, 1);
        assert_eq!(report.total_attributes, 2);
    }

    #[test]
    fn empty_model() {
        let (model, program) = analyzed(&[("empty.js", "var x = 1;\n")]);
        let report = compute_metrics(&model, &program);
        assert_eq!(report.noc, 0);
        assert!(report.per_class.is_empty());
        assert_eq!(report.per_package.len(), 1);
        assert_eq!(report.per_package["empty.js"].class_count, 0);
        assert_eq!(report.per_package["empty.js"].loc, 1);
    }

    #[test]
    fn chain_dit_counts_edges_from_root() {
        let (model, program) = analyzed(&[(
            "chain.js",
            "function A() {}\nfunction B() {}\nfunction C() {}\nB.prototype = new A();\nC.prototype = new B();\nvar a = new A();\nvar b = new B();\nvar c = new C();\n",
        )]);
        let report = compute_metrics(&model, &program);
        assert_eq!(class(&report, "A").dit, 0);
        assert_eq!(class(&report, "B").dit, 1);
        assert_eq!(class(&report, "C").dit, 2);
        // dit(child) = dit(parent) + 1 for every edge
        for edge in &model.edges {
            assert_eq!(
                class(&report, &edge.subclass).dit,
                class(&report, &edge.superclass).dit + 1
            );
        }
    }

    #[test]
    fn removing_edges_zeroes_dit_and_children_only() {
        let (model, program) = analyzed(&[(
            "chain.js",
            "function A() { this.x = 1; }\nfunction B() { this.y = 2; }\nB.prototype = new A();\nB.prototype.go = function () {};\nvar a = new A();\nvar b = new B();\n",
        )]);
        let with_edges = compute_metrics(&model, &program);
        let mut stripped = model.clone();
        stripped.edges.clear();
        for c in stripped.classes.values_mut() {
            c.superclass = None;
            c.children.clear();
        }
        let without = compute_metrics(&stripped, &program);
        for c in &without.per_class {
            assert_eq!(c.dit, 0);
            assert_eq!(c.children_count, 0);
            let before = class(&with_edges, &c.class_name);
            assert_eq!(c.nom, before.nom);
            assert_eq!(c.noa, before.noa);
        }
    }

    #[test]
    fn package_class_counts_sum_to_noc() {
        let (model, program) = analyzed(&[
            ("a.js", "function A() {}\nvar a = new A();\n"),
            (
                "b.js",
                "function B() {}\nvar b = new B();\nfunction C() {}\nvar c = new C();\n",
            ),
            ("none.js", "var nothing = true;\n"),
        ]);
        let report = compute_metrics(&model, &program);
        let sum: u32 = report.per_package.values().map(|p| p.class_count).sum();
        assert_eq!(sum, report.noc);
        assert_eq!(report.per_package.len(), 3);
    }

    #[test]
    fn members_aggregate_to_defining_file() {
        let (model, program) = analyzed(&[
            ("def.js", "function W() { this.a = 1; }\n"),
            (
                "ext.js",
                "W.prototype.run = function () {};\nvar w = new W();\n",
            ),
        ]);
        let report = compute_metrics(&model, &program);
        assert_eq!(report.per_package["def.js"].class_count, 1);
        assert_eq!(report.per_package["def.js"].method_count, 1);
        assert_eq!(report.per_package["def.js"].attribute_count, 1);
        assert_eq!(report.per_package["ext.js"].class_count, 0);
        assert_eq!(report.per_package["ext.js"].method_count, 0);
    }

    #[test]
    fn recomputation_is_identical() {
        let (model, program) =
            analyzed(&[("m.js", "function A() { this.x = 1; }\nvar a = new A();\n")]);
        assert_eq!(
            compute_metrics(&model, &program),
            compute_metrics(&model, &program)
        );
    }
}
