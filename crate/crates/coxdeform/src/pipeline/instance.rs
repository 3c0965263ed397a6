use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coxcore::{
    build_system, eval, reflection_from_conjugate, CoxeterMatrix, CoxeterSystem, Label,
    ReflectionRecord, Word, DEFAULT_ORDER_CAP,
};

use super::PipelineError;

pub const DEFAULT_GROUP_CAP: usize = 20000;

/// The input file as written on disk.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputFile {
    pub generators: Vec<String>,
    pub matrix: Vec<Vec<Label>>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub options: Option<InputOptions>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_cap: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub order_cap: u64,
    pub group_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order_cap: DEFAULT_ORDER_CAP,
            group_cap: DEFAULT_GROUP_CAP,
        }
    }
}

/// A Coxeter system `(W, R)` with a candidate set `S` of reflections.
#[derive(Clone, Debug)]
pub struct ProblemInstance {
    pub matrix: CoxeterMatrix,
    pub sys: CoxeterSystem,
    /// Elements of `S` as reduced words `w r w^-1` in `R`.
    pub s_words: Vec<Word>,
    pub refl: Vec<ReflectionRecord>,
    pub caps: Caps,
}

impl ProblemInstance {
    pub fn names(&self) -> &[String] {
        self.matrix.names()
    }

    /// Printable name of an element of `S`.
    pub fn label(&self, w: &Word) -> String {
        w.display(self.names()).to_string()
    }

    pub fn labels(&self) -> Vec<String> {
        self.s_words.iter().map(|w| self.label(w)).collect()
    }

    pub fn to_input(&self) -> InputFile {
        InputFile {
            generators: self.names().to_vec(),
            matrix: self.matrix.rows().to_vec(),
            s: self
                .s_words
                .iter()
                .map(|w| w.to_names(self.names()))
                .collect(),
            options: Some(InputOptions {
                order_cap: Some(self.caps.order_cap),
                group_cap: Some(self.caps.group_cap),
            }),
        }
    }
}

pub fn load(path: &Path) -> Result<ProblemInstance, PipelineError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| PipelineError::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<ProblemInstance, PipelineError> {
    let input: InputFile =
        serde_json::from_str(text).map_err(|e| PipelineError::Parse(e.to_string()))?;
    from_input(&input)
}

pub fn from_input(input: &InputFile) -> Result<ProblemInstance, PipelineError> {
    let matrix = CoxeterMatrix::new(input.generators.clone(), input.matrix.clone())
        .map_err(|e| PipelineError::Parse(e.to_string()))?;
    let sys = build_system(&matrix).map_err(|e| PipelineError::Parse(e.to_string()))?;
    let opts = input.options.clone().unwrap_or_default();
    let caps = Caps {
        order_cap: opts.order_cap.unwrap_or(DEFAULT_ORDER_CAP),
        group_cap: opts.group_cap.unwrap_or(DEFAULT_GROUP_CAP),
    };
    let words = input
        .s
        .iter()
        .enumerate()
        .map(|(i, letters)| {
            let idx = letters
                .iter()
                .map(|l| {
                    matrix.index_of(l).ok_or_else(|| {
                        PipelineError::Parse(format!("S[{i}]: unknown generator {l:?}"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Word(idx))
        })
        .collect::<Result<Vec<_>, PipelineError>>()?;
    with_words(matrix, sys, words, caps)
}

/// Validate words as reflections `w r w^-1` and attach their roots.
pub fn with_words(
    matrix: CoxeterMatrix,
    sys: CoxeterSystem,
    words: Vec<Word>,
    caps: Caps,
) -> Result<ProblemInstance, PipelineError> {
    let mut s_words = Vec::new();
    let mut refl: Vec<ReflectionRecord> = Vec::new();
    for (i, w) in words.iter().enumerate() {
        let (c, x) = w.split_conjugate().ok_or(PipelineError::NotAReflection {
            index: i,
            reason: "not of the form w r w^-1 after free reduction".into(),
        })?;
        let rec = reflection_from_conjugate(&c, x, &sys);
        if !eval(w, &sys).matrix.mul(&rec.element.matrix).is_identity() {
            return Err(PipelineError::NotAReflection {
                index: i,
                reason: "evaluation does not match the conjugate form".into(),
            });
        }
        if let Some(j) = refl.iter().position(|r| r.element == rec.element) {
            return Err(PipelineError::Parse(format!("S[{i}] equals S[{j}]")));
        }
        s_words.push(w.reduced());
        refl.push(rec);
    }
    Ok(ProblemInstance {
        matrix,
        sys,
        s_words,
        refl,
        caps,
    })
}
