//! The generic retargeting transformation.
//!
//! No platform knowledge lives in this module: everything it needs — kinds,
//! classification tags, role bindings, data types — comes from the two
//! platform models it is handed. The transformation proceeds in three
//! stages:
//!
//! 1. **match** — every source resource type is paired with the target
//!    type of equal kind and equal classification signature (ties broken
//!    toward the lexicographically smallest target name),
//! 2. **weave** — for each role bound on either side, the i-th source
//!    feature is paired with the i-th target feature,
//! 3. **transfer** — each instance of a matched type is re-created under
//!    the target type; slot values on woven attributes are converted to the
//!    target data type and assigned to the woven attribute.
//!
//! Everything the transformation cannot carry over is reported, never
//! silently dropped: unmatched types, omitted instances, arity mismatches
//! in role bindings, and priority values whose cross-platform meaning is
//! not guaranteed.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{Map, Value as Json};

use crate::io::value_to_json;
use crate::model::{
    check_value, classification_signature, role_features, ApplicationModel, BaseType, DataTypeDef,
    InstanceSpec, PlatformModel, PriorityRange, ResourceType, Role, Value, ValueCheckError,
};
use crate::validate::{validate_application, validate_platform, ValidationDiagnostic};

/// How priority values travel across platforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PriorityMode {
    /// Copy the number unchanged and warn (W202) that its meaning may
    /// differ on the target.
    #[default]
    Verbatim,
    /// Remap by urgency position between the two declared priority ranges.
    Normalize,
}

/// Tie-break rule between several matching target types. There is exactly
/// one: it is part of the policy surface so reports can name it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LexicographicSmallestTargetName,
}

/// Knobs of one retargeting run.
#[derive(Debug, Clone, Copy, Default)]
pub struct RetargetPolicy {
    /// Fail on any omission or conversion error instead of omit-and-warn.
    pub strict: bool,
    pub priority_mode: PriorityMode,
    pub tie_break: TieBreak,
}

/// Why a source resource type found no counterpart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnmatchedReason {
    /// No target type of the same kind exists.
    NoKindMatch,
    /// Types of the same kind exist but none with an equal signature.
    TagMismatch,
}

impl UnmatchedReason {
    pub fn as_str(self) -> &'static str {
        match self {
            UnmatchedReason::NoKindMatch => "NoKindMatch",
            UnmatchedReason::TagMismatch => "TagMismatch",
        }
    }
}

impl fmt::Display for UnmatchedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why an instance was left out of the output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmitReason {
    NoTargetType,
}

impl OmitReason {
    pub fn as_str(self) -> &'static str {
        match self {
            OmitReason::NoTargetType => "NoTargetType",
        }
    }
}

impl fmt::Display for OmitReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One matched (source type, target type) pair with its per-role feature
/// weave in declaration-order lockstep.
#[derive(Debug, Clone, PartialEq)]
pub struct TypePair {
    pub source: String,
    pub target: String,
    /// Role -> [(source feature, target feature)].
    pub role_weave: BTreeMap<Role, Vec<(String, String)>>,
}

/// A source type that found no counterpart.
#[derive(Debug, Clone, PartialEq)]
pub struct UnmatchedType {
    pub name: String,
    pub reason: UnmatchedReason,
}

/// A coded, subject-addressed warning of the mapping or transfer stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportWarning {
    pub code: String,
    pub subject: String,
    pub message: String,
}

impl ReportWarning {
    fn new(code: &str, subject: impl Into<String>, message: impl Into<String>) -> Self {
        ReportWarning {
            code: code.to_string(),
            subject: subject.into(),
            message: message.into(),
        }
    }
}

/// The computed source-type -> target-type correspondence.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TypeMapping {
    pub pairs: Vec<TypePair>,
    pub unmatched_source_types: Vec<UnmatchedType>,
    /// W201/W203/W204 findings, pending inclusion in the retarget report.
    pub warnings: Vec<ReportWarning>,
}

impl TypeMapping {
    pub fn pair_for(&self, source_type: &str) -> Option<&TypePair> {
        self.pairs.iter().find(|p| p.source == source_type)
    }
}

/// One successfully transferred instance, as recorded in the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappedInstance {
    pub source_name: String,
    pub source_type: String,
    pub target_type: String,
}

/// One instance left out of the output, with the reason.
#[derive(Debug, Clone, PartialEq)]
pub struct OmittedInstance {
    pub name: String,
    pub reason: OmitReason,
}

/// One slot value carried across, before and after conversion.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueConversion {
    pub instance: String,
    pub source_feature: String,
    pub target_feature: String,
    pub source_value: Value,
    pub target_value: Value,
}

/// Machine-readable record of every decision of one retargeting run.
/// `mapped_instances` and `omitted_instances` partition the source
/// application's resource instances.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RetargetReport {
    pub mapped_instances: Vec<MappedInstance>,
    pub omitted_instances: Vec<OmittedInstance>,
    pub warnings: Vec<ReportWarning>,
    pub value_conversions: Vec<ValueConversion>,
}

/// Value conversion failure codes E301..E305.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConversionError {
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("'{0}' does not parse as a {1} value")]
    UnparseableString(String, BaseType),
    #[error("'{literal}' is not a literal of enum type '{type_name}'")]
    NoEnumLiteral { literal: String, type_name: String },
    #[error("no conversion from {from} to {to}")]
    IncompatibleBases { from: BaseType, to: BaseType },
    #[error("{0}")]
    MissingRange(String),
}

impl ConversionError {
    pub fn code(&self) -> &'static str {
        match self {
            ConversionError::OutOfRange(_) => "E301",
            ConversionError::UnparseableString(..) => "E302",
            ConversionError::NoEnumLiteral { .. } => "E303",
            ConversionError::IncompatibleBases { .. } => "E304",
            ConversionError::MissingRange(_) => "E305",
        }
    }
}

/// Failure of a whole retargeting run.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RetargetError {
    /// E310: the inputs do not validate cleanly.
    #[error("inputs do not validate cleanly:\n{}", format_diags(.0))]
    PreconditionFailed(Vec<ValidationDiagnostic>),
    /// E311: strict mode and at least one omission or conversion error.
    #[error("strict mode violation: {0}")]
    StrictModeViolation(String),
}

impl RetargetError {
    pub fn code(&self) -> &'static str {
        match self {
            RetargetError::PreconditionFailed(_) => "E310",
            RetargetError::StrictModeViolation(_) => "E311",
        }
    }
}

fn format_diags(diags: &[ValidationDiagnostic]) -> String {
    diags.iter().map(|d| format!("  {d}")).collect::<Vec<_>>().join("\n")
}

/// Pairs every source resource type with the target type of equal kind and
/// equal classification signature. With several candidates the
/// lexicographically smallest target name wins and W203 is recorded. Role
/// bindings are woven index-by-index; arity leftovers are recorded as W201
/// (source side longer) or W204 (target side longer).
pub fn match_types(
    src: &PlatformModel,
    tgt: &PlatformModel,
    _policy: &RetargetPolicy,
) -> TypeMapping {
    let mut mapping = TypeMapping::default();

    for srt in &src.resource_types {
        let same_kind: Vec<&ResourceType> =
            tgt.resource_types.iter().filter(|t| t.kind == srt.kind).collect();
        if same_kind.is_empty() {
            mapping.unmatched_source_types.push(UnmatchedType {
                name: srt.name.clone(),
                reason: UnmatchedReason::NoKindMatch,
            });
            continue;
        }
        let signature = classification_signature(srt);
        let mut candidates: Vec<&ResourceType> = same_kind
            .into_iter()
            .filter(|t| classification_signature(t) == signature)
            .collect();
        if candidates.is_empty() {
            mapping.unmatched_source_types.push(UnmatchedType {
                name: srt.name.clone(),
                reason: UnmatchedReason::TagMismatch,
            });
            continue;
        }
        candidates.sort_by(|a, b| a.name.cmp(&b.name));
        let chosen = candidates[0];
        if candidates.len() > 1 {
            let names: Vec<&str> = candidates.iter().map(|c| c.name.as_str()).collect();
            mapping.warnings.push(ReportWarning::new(
                "W203",
                srt.name.clone(),
                format!(
                    "several target types match ({}); tie broken toward '{}'",
                    names.join(", "),
                    chosen.name
                ),
            ));
        }

        let mut role_weave = BTreeMap::new();
        let roles: std::collections::BTreeSet<&Role> =
            srt.roles.keys().chain(chosen.roles.keys()).collect();
        for role in roles {
            let s = role_features(srt, role);
            let t = role_features(chosen, role);
            let woven: Vec<(String, String)> = s
                .iter()
                .zip(t.iter())
                .map(|(a, b)| (a.clone(), b.clone()))
                .collect();
            if !woven.is_empty() {
                role_weave.insert(role.clone(), woven);
            }
            if s.len() > t.len() {
                let leftovers: Vec<&str> = s[t.len()..].iter().map(String::as_str).collect();
                mapping.warnings.push(ReportWarning::new(
                    "W201",
                    format!("{}.{role}", srt.name),
                    format!(
                        "source features [{}] have no woven counterpart in '{}'",
                        leftovers.join(", "),
                        chosen.name
                    ),
                ));
            } else if t.len() > s.len() {
                let leftovers: Vec<&str> = t[s.len()..].iter().map(String::as_str).collect();
                mapping.warnings.push(ReportWarning::new(
                    "W204",
                    format!("{}.{role}", srt.name),
                    format!(
                        "target features [{}] of '{}' receive no woven source",
                        leftovers.join(", "),
                        chosen.name
                    ),
                ));
            }
        }

        mapping.pairs.push(TypePair {
            source: srt.name.clone(),
            target: chosen.name.clone(),
            role_weave,
        });
    }

    mapping
}

/// Converts a value typed by `src_dt` into one typed by `tgt_dt`.
///
/// Same-base numerics widen freely and narrow only when the value fits the
/// target width and range; int and uint interconvert when representable;
/// numerics format decimally into strings and strings parse strictly into
/// numerics; enums map by identical literal name. Everything else is
/// incompatible.
pub fn convert_value(
    v: &Value,
    src_dt: &DataTypeDef,
    tgt_dt: &DataTypeDef,
) -> Result<Value, ConversionError> {
    use BaseType::*;
    let incompatible = || ConversionError::IncompatibleBases {
        from: src_dt.base,
        to: tgt_dt.base,
    };
    match (v, tgt_dt.base) {
        (Value::Int(_), Int) | (Value::Uint(_), Uint) | (Value::Float(_), Float) => {
            fit(v.clone(), tgt_dt)
        }
        (Value::Int(i), Uint) => {
            if *i < 0 {
                Err(ConversionError::OutOfRange(format!(
                    "{i} is not representable as '{}'",
                    tgt_dt.name
                )))
            } else {
                fit(Value::Uint(*i as u64), tgt_dt)
            }
        }
        (Value::Uint(u), Int) => {
            if *u > i64::MAX as u64 {
                Err(ConversionError::OutOfRange(format!(
                    "{u} is not representable as '{}'",
                    tgt_dt.name
                )))
            } else {
                fit(Value::Int(*u as i64), tgt_dt)
            }
        }
        (Value::Int(i), String) => Ok(Value::Str(i.to_string())),
        (Value::Uint(u), String) => Ok(Value::Str(u.to_string())),
        (Value::Float(x), String) => Ok(Value::Str(format_float(*x))),
        (Value::Str(s), Int) => match s.parse::<i64>() {
            Ok(i) => fit(Value::Int(i), tgt_dt),
            Err(_) => Err(ConversionError::UnparseableString(s.clone(), Int)),
        },
        (Value::Str(s), Uint) => match s.parse::<u64>() {
            Ok(u) => fit(Value::Uint(u), tgt_dt),
            Err(_) => Err(ConversionError::UnparseableString(s.clone(), Uint)),
        },
        (Value::Str(s), Float) => match s.parse::<f64>() {
            Ok(x) if x.is_finite() => fit(Value::Float(x), tgt_dt),
            _ => Err(ConversionError::UnparseableString(s.clone(), Float)),
        },
        (Value::Bool(_), Bool) if src_dt.base == Bool => Ok(v.clone()),
        (Value::Str(_), String) => Ok(v.clone()),
        (Value::EnumLit(l), Enum) if src_dt.base == Enum => {
            if tgt_dt.enum_literals.iter().any(|lit| lit == l) {
                Ok(v.clone())
            } else {
                Err(ConversionError::NoEnumLiteral {
                    literal: l.clone(),
                    type_name: tgt_dt.name.clone(),
                })
            }
        }
        _ => Err(incompatible()),
    }
}

fn fit(v: Value, tgt_dt: &DataTypeDef) -> Result<Value, ConversionError> {
    match check_value(&v, tgt_dt) {
        Ok(()) => Ok(v),
        Err(ValueCheckError::OutOfRange { detail }) => Err(ConversionError::OutOfRange(detail)),
        Err(ValueCheckError::UnknownLiteral { literal, type_name }) => {
            Err(ConversionError::NoEnumLiteral { literal, type_name })
        }
        Err(ValueCheckError::BaseMismatch { expected, found }) => {
            Err(ConversionError::IncompatibleBases { from: found, to: expected })
        }
    }
}

/// Decimal formatting shared with the document encoding (shortest
/// round-trip form, always with a fractional part or exponent).
fn format_float(x: f64) -> String {
    serde_json::Number::from_f64(x).expect("finite float").to_string()
}

/// Remaps a priority by its position on the urgency axis: the value is
/// located between the source range's lowest- and highest-urgency
/// endpoints and re-expressed at the same position along the target range,
/// rounded to the nearest integer (ties away from zero). Endpoints map to
/// endpoints exactly and the mapping is monotone in urgency.
pub fn normalize_priority(
    v: i64,
    src: Option<&PriorityRange>,
    tgt: Option<&PriorityRange>,
) -> Result<i64, ConversionError> {
    let src = src.ok_or_else(|| {
        ConversionError::MissingRange("source platform declares no priorityRange".to_string())
    })?;
    let tgt = tgt.ok_or_else(|| {
        ConversionError::MissingRange("target platform declares no priorityRange".to_string())
    })?;
    if src.low == src.high {
        return Err(ConversionError::MissingRange(
            "source priorityRange is degenerate".to_string(),
        ));
    }
    if !src.contains(v) {
        return Err(ConversionError::OutOfRange(format!(
            "priority {v} lies outside the source range [{}, {}]",
            src.low, src.high
        )));
    }
    let su0 = src.lowest_urgency_value() as i128;
    let su1 = src.highest_urgency_value() as i128;
    let tu0 = tgt.lowest_urgency_value() as i128;
    let tu1 = tgt.highest_urgency_value() as i128;
    let num = (v as i128 - su0)
        .checked_mul(tu1 - tu0)
        .ok_or_else(|| ConversionError::OutOfRange("priority arithmetic overflow".to_string()))?;
    let den = su1 - su0;
    Ok((tu0 + div_round_nearest(num, den)) as i64)
}

/// Integer division rounded to the nearest quotient, ties away from zero.
fn div_round_nearest(num: i128, den: i128) -> i128 {
    let (n, d) = if den < 0 { (-num, -den) } else { (num, den) };
    if n >= 0 {
        (2 * n + d) / (2 * d)
    } else {
        -((2 * -n + d) / (2 * d))
    }
}

/// Result of transferring one instance.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceOutcome {
    Mapped {
        instance: InstanceSpec,
        warnings: Vec<ReportWarning>,
        conversions: Vec<ValueConversion>,
    },
    Omitted {
        name: String,
        reason: OmitReason,
    },
}

/// Re-creates one instance under the woven target type.
///
/// The output keeps the source name and its dependencies verbatim. Each
/// slot on a woven source attribute is converted and assigned to the woven
/// target attribute (priorityElements values additionally pass through
/// [`normalize_priority`] under `PriorityMode::Normalize`). Slots on
/// attributes bound to no role, or to roles the weave does not carry, are
/// dropped with W205. Target attributes left unset take their declared
/// defaults. A dual-role feature never produces duplicate slot
/// assignments.
///
/// Under a strict policy the first conversion failure is returned as an
/// error; otherwise failures become report warnings carrying the E-code
/// and the slot is dropped.
pub fn retarget_instance(
    inst: &InstanceSpec,
    mapping: &TypeMapping,
    src: &PlatformModel,
    tgt: &PlatformModel,
    policy: &RetargetPolicy,
) -> Result<InstanceOutcome, RetargetError> {
    let Some(pair) = mapping.pair_for(&inst.type_name) else {
        return Ok(InstanceOutcome::Omitted {
            name: inst.name.clone(),
            reason: OmitReason::NoTargetType,
        });
    };
    let src_rt = src
        .resource_type(&inst.type_name)
        .expect("instance type exists in a validated source platform");
    let tgt_rt = tgt
        .resource_type(&pair.target)
        .expect("mapping target exists in the target platform");

    let mut warnings = Vec::new();
    let mut conversions = Vec::new();
    let mut slots: BTreeMap<String, Value> = BTreeMap::new();
    // target attribute -> source attribute it was woven from
    let mut assigned: BTreeMap<String, String> = BTreeMap::new();

    for (attr_name, value) in &inst.slots {
        let slot_subject = format!("{}.{}", inst.name, attr_name);
        // every woven (role, target feature) this attribute participates in
        let mut woven: Vec<(&Role, &str)> = Vec::new();
        let mut bound = false;
        for (role, features) in &src_rt.roles {
            if let Some(pos) = features.iter().position(|f| f == attr_name) {
                bound = true;
                if let Some(pairs) = pair.role_weave.get(role) {
                    if let Some((_, t)) = pairs.get(pos) {
                        woven.push((role, t.as_str()));
                    }
                }
            }
        }
        if woven.is_empty() {
            let why = if bound {
                format!("its role is not woven into '{}'", tgt_rt.name)
            } else {
                "it is bound to no role".to_string()
            };
            warnings.push(ReportWarning::new(
                "W205",
                slot_subject,
                format!("slot dropped: {why}"),
            ));
            continue;
        }

        let src_attr = src_rt
            .attribute(attr_name)
            .expect("slot names an attribute in a validated application");
        let src_dt = src
            .data_type(&src_attr.type_name)
            .expect("attribute type resolves in a validated platform");

        for (role, tgt_feature) in woven {
            let Some(tgt_attr) = tgt_rt.attribute(tgt_feature) else {
                warnings.push(ReportWarning::new(
                    "W205",
                    format!("{}.{}", inst.name, attr_name),
                    format!(
                        "slot dropped: woven target feature '{tgt_feature}' of '{}' is not an attribute",
                        tgt_rt.name
                    ),
                ));
                continue;
            };
            let tgt_dt = tgt
                .data_type(&tgt_attr.type_name)
                .expect("attribute type resolves in a validated platform");

            let normalize = *role == Role::PriorityElements
                && policy.priority_mode == PriorityMode::Normalize;
            let converted = if normalize {
                normalize_slot(value, src, tgt, tgt_dt)
            } else {
                convert_value(value, src_dt, tgt_dt)
            };

            match converted {
                Ok(new_value) => {
                    if let Some(prev_src) = assigned.get(tgt_attr.name.as_str()) {
                        if slots.get(&tgt_attr.name) != Some(&new_value) {
                            warnings.push(ReportWarning::new(
                                "W205",
                                format!("{}.{}", inst.name, attr_name),
                                format!(
                                    "slot dropped: '{}' was already woven from '{prev_src}' with a different value",
                                    tgt_attr.name
                                ),
                            ));
                        }
                        continue;
                    }
                    assigned.insert(tgt_attr.name.clone(), attr_name.clone());
                    slots.insert(tgt_attr.name.clone(), new_value.clone());
                    conversions.push(ValueConversion {
                        instance: inst.name.clone(),
                        source_feature: attr_name.clone(),
                        target_feature: tgt_attr.name.clone(),
                        source_value: value.clone(),
                        target_value: new_value,
                    });
                    if *role == Role::PriorityElements
                        && policy.priority_mode == PriorityMode::Verbatim
                        && src.name != tgt.name
                    {
                        warnings.push(ReportWarning::new(
                            "W202",
                            format!("{}.{}", inst.name, tgt_attr.name),
                            format!(
                                "priority {value} copied verbatim from '{}' to '{}'; equal numbers need not mean equal urgency",
                                src.name, tgt.name
                            ),
                        ));
                    }
                }
                Err(err) => {
                    if policy.strict {
                        return Err(RetargetError::StrictModeViolation(format!(
                            "converting slot '{attr_name}' of instance '{}': {err}",
                            inst.name
                        )));
                    }
                    warnings.push(ReportWarning::new(
                        err.code(),
                        format!("{}.{}", inst.name, attr_name),
                        format!("slot dropped: {err}"),
                    ));
                }
            }
        }
    }

    for attr in &tgt_rt.attributes {
        if let (false, Some(default)) = (slots.contains_key(&attr.name), &attr.default) {
            slots.insert(attr.name.clone(), default.clone());
        }
    }

    Ok(InstanceOutcome::Mapped {
        instance: InstanceSpec {
            name: inst.name.clone(),
            type_name: pair.target.clone(),
            slots,
            dependencies: inst.dependencies.clone(),
        },
        warnings,
        conversions,
    })
}

fn normalize_slot(
    value: &Value,
    src: &PlatformModel,
    tgt: &PlatformModel,
    tgt_dt: &DataTypeDef,
) -> Result<Value, ConversionError> {
    let raw = match value {
        Value::Int(i) => *i,
        Value::Uint(u) => i64::try_from(*u).map_err(|_| {
            ConversionError::OutOfRange(format!("priority {u} exceeds the integer range"))
        })?,
        other => {
            return Err(ConversionError::IncompatibleBases {
                from: other.base(),
                to: tgt_dt.base,
            })
        }
    };
    let n = normalize_priority(raw, src.priority_range.as_ref(), tgt.priority_range.as_ref())?;
    match tgt_dt.base {
        BaseType::Int => fit(Value::Int(n), tgt_dt),
        BaseType::Uint if n >= 0 => fit(Value::Uint(n as u64), tgt_dt),
        BaseType::Uint => Err(ConversionError::OutOfRange(format!(
            "normalized priority {n} is not representable as '{}'",
            tgt_dt.name
        ))),
        other => Err(ConversionError::IncompatibleBases { from: BaseType::Int, to: other }),
    }
}

/// Retargets a whole application from `src` to `tgt`.
///
/// Preconditions (E310): both platforms and the application validate with
/// no error-severity diagnostics. Application-owned elements and objects
/// are copied unchanged; resource instances of matched types are
/// transferred in source order; the rest are omitted and reported. Under
/// `strict` any omission or conversion failure aborts with E311 instead.
pub fn retarget(
    app: &ApplicationModel,
    src: &PlatformModel,
    tgt: &PlatformModel,
    policy: &RetargetPolicy,
) -> Result<(ApplicationModel, RetargetReport), RetargetError> {
    let mut pre: Vec<ValidationDiagnostic> = Vec::new();
    pre.extend(validate_platform(src).into_iter().filter(|d| d.is_error()));
    pre.extend(validate_platform(tgt).into_iter().filter(|d| d.is_error()));
    pre.extend(validate_application(app, src).into_iter().filter(|d| d.is_error()));
    if !pre.is_empty() {
        return Err(RetargetError::PreconditionFailed(pre));
    }

    let mapping = match_types(src, tgt, policy);
    let mut report = RetargetReport {
        warnings: mapping.warnings.clone(),
        ..Default::default()
    };

    let mut instances = Vec::new();
    for inst in &app.resource_instances {
        match retarget_instance(inst, &mapping, src, tgt, policy)? {
            InstanceOutcome::Mapped { instance, warnings, conversions } => {
                report.mapped_instances.push(MappedInstance {
                    source_name: inst.name.clone(),
                    source_type: inst.type_name.clone(),
                    target_type: instance.type_name.clone(),
                });
                report.warnings.extend(warnings);
                report.value_conversions.extend(conversions);
                instances.push(instance);
            }
            InstanceOutcome::Omitted { name, reason } => {
                report.omitted_instances.push(OmittedInstance { name, reason });
            }
        }
    }

    // Dependencies are copied verbatim; a target naming a predefined
    // instance of the source platform may resolve to nothing on the
    // target side, so it is flagged rather than remapped.
    for inst in &instances {
        for (j, dep) in inst.dependencies.iter().enumerate() {
            let owner = dep.target.owner.as_str();
            let app_owned = app.app_element(owner).is_some()
                || app.app_object(owner).is_some()
                || app.resource_instance(owner).is_some();
            if !app_owned && src.predefined_instance(owner).is_some() {
                report.warnings.push(ReportWarning::new(
                    "W206",
                    format!("{}.dependencies.{j}", inst.name),
                    format!(
                        "'{}' names a predefined instance of source platform '{}'; copied verbatim",
                        dep.target, src.name
                    ),
                ));
            }
        }
    }

    if policy.strict && !report.omitted_instances.is_empty() {
        let names: Vec<&str> =
            report.omitted_instances.iter().map(|o| o.name.as_str()).collect();
        return Err(RetargetError::StrictModeViolation(format!(
            "instances [{}] have no target type",
            names.join(", ")
        )));
    }

    let out = ApplicationModel {
        name: app.name.clone(),
        platform_name: tgt.name.clone(),
        app_elements: app.app_elements.clone(),
        app_objects: app.app_objects.clone(),
        resource_instances: instances,
    };
    Ok((out, report))
}

/// Canonical JSON rendering of a report (stable key order, 2-space
/// indentation, trailing newline).
pub fn report_to_json(report: &RetargetReport) -> String {
    let mut root = Map::new();
    root.insert(
        "mappedInstances".into(),
        Json::Array(
            report
                .mapped_instances
                .iter()
                .map(|m| {
                    let mut o = Map::new();
                    o.insert("sourceName".into(), Json::from(m.source_name.as_str()));
                    o.insert("sourceType".into(), Json::from(m.source_type.as_str()));
                    o.insert("targetType".into(), Json::from(m.target_type.as_str()));
                    Json::Object(o)
                })
                .collect(),
        ),
    );
    root.insert(
        "omittedInstances".into(),
        Json::Array(
            report
                .omitted_instances
                .iter()
                .map(|o| {
                    let mut m = Map::new();
                    m.insert("name".into(), Json::from(o.name.as_str()));
                    m.insert("reasonCode".into(), Json::from(o.reason.as_str()));
                    Json::Object(m)
                })
                .collect(),
        ),
    );
    root.insert("warnings".into(), warnings_to_json(&report.warnings));
    root.insert(
        "valueConversions".into(),
        Json::Array(
            report
                .value_conversions
                .iter()
                .map(|c| {
                    let mut m = Map::new();
                    m.insert("instance".into(), Json::from(c.instance.as_str()));
                    m.insert("sourceFeature".into(), Json::from(c.source_feature.as_str()));
                    m.insert("targetFeature".into(), Json::from(c.target_feature.as_str()));
                    m.insert("sourceValue".into(), value_to_json(&c.source_value));
                    m.insert("targetValue".into(), value_to_json(&c.target_value));
                    Json::Object(m)
                })
                .collect(),
        ),
    );
    render(Json::Object(root))
}

/// Canonical JSON rendering of a type mapping.
pub fn mapping_to_json(mapping: &TypeMapping) -> String {
    let mut root = Map::new();
    root.insert(
        "pairs".into(),
        Json::Array(
            mapping
                .pairs
                .iter()
                .map(|p| {
                    let mut m = Map::new();
                    m.insert("source".into(), Json::from(p.source.as_str()));
                    m.insert("target".into(), Json::from(p.target.as_str()));
                    let mut weave = Map::new();
                    for (role, pairs) in &p.role_weave {
                        weave.insert(
                            role.as_str().to_string(),
                            Json::Array(
                                pairs
                                    .iter()
                                    .map(|(s, t)| {
                                        let mut w = Map::new();
                                        w.insert("source".into(), Json::from(s.as_str()));
                                        w.insert("target".into(), Json::from(t.as_str()));
                                        Json::Object(w)
                                    })
                                    .collect(),
                            ),
                        );
                    }
                    m.insert("roleWeave".into(), Json::Object(weave));
                    Json::Object(m)
                })
                .collect(),
        ),
    );
    root.insert(
        "unmatchedSourceTypes".into(),
        Json::Array(
            mapping
                .unmatched_source_types
                .iter()
                .map(|u| {
                    let mut m = Map::new();
                    m.insert("name".into(), Json::from(u.name.as_str()));
                    m.insert("reason".into(), Json::from(u.reason.as_str()));
                    Json::Object(m)
                })
                .collect(),
        ),
    );
    root.insert("warnings".into(), warnings_to_json(&mapping.warnings));
    render(Json::Object(root))
}

fn warnings_to_json(warnings: &[ReportWarning]) -> Json {
    Json::Array(
        warnings
            .iter()
            .map(|w| {
                let mut m = Map::new();
                m.insert("code".into(), Json::from(w.code.as_str()));
                m.insert("subject".into(), Json::from(w.subject.as_str()));
                m.insert("message".into(), Json::from(w.message.as_str()));
                Json::Object(m)
            })
            .collect(),
    )
}

fn render(root: Json) -> String {
    let mut text = serde_json::to_string_pretty(&root).expect("report serializes to JSON");
    text.push('\n');
    text
}
