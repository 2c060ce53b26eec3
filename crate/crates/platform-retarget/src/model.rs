//! In-memory domain types for execution platforms and the applications
//! deployed on them.
//!
//! A [`PlatformModel`] catalogs what one execution platform offers through
//! its API: data types, resource types (tasks, queues, mutexes, ...) with
//! their attributes and services, and predefined instances. Semantics are
//! attached to resource-type features through *role bindings*: a named
//! attribute or service is declared to play a [`Role`] such as
//! `priorityElements` or `terminateServices`. Matching and retargeting work
//! purely on kinds, classification tags, and roles — the metamodel itself
//! never fixes attribute value types, so two platforms may give the same
//! role a different data type.
//!
//! All types are immutable after construction and every operation here is a
//! pure function of its inputs.

use std::collections::BTreeMap;
use std::fmt;

/// Base of a platform data type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BaseType {
    Int,
    Uint,
    Float,
    Bool,
    String,
    Enum,
}

impl BaseType {
    pub const ALL: &'static [BaseType] = &[
        BaseType::Int,
        BaseType::Uint,
        BaseType::Float,
        BaseType::Bool,
        BaseType::String,
        BaseType::Enum,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BaseType::Int => "int",
            BaseType::Uint => "uint",
            BaseType::Float => "float",
            BaseType::Bool => "bool",
            BaseType::String => "string",
            BaseType::Enum => "enum",
        }
    }

    pub fn parse(s: &str) -> Option<BaseType> {
        Self::ALL.iter().copied().find(|b| b.as_str() == s)
    }

    /// int, uint and float carry bit widths and ranges.
    pub fn is_numeric(self) -> bool {
        matches!(self, BaseType::Int | BaseType::Uint | BaseType::Float)
    }
}

impl fmt::Display for BaseType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named data type of a platform API, e.g. `int32` or a status enum.
#[derive(Debug, Clone, PartialEq)]
pub struct DataTypeDef {
    pub name: String,
    pub base: BaseType,
    /// Bit width for numeric bases. 1..=64 for int/uint, 32 or 64 for float.
    pub bits: Option<u32>,
    /// Literals of an enum type, in declaration order. Non-empty iff base is enum.
    pub enum_literals: Vec<String>,
    /// Inclusive [min, max] bound on numeric values, on top of the width bound.
    pub range: Option<(f64, f64)>,
}

impl DataTypeDef {
    pub fn plain(name: &str, base: BaseType) -> Self {
        DataTypeDef {
            name: name.to_string(),
            base,
            bits: None,
            enum_literals: Vec::new(),
            range: None,
        }
    }
}

/// The eleven resource kinds of the software-resource taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ResourceKind {
    SwSchedulableResource,
    MemoryPartition,
    InterruptResource,
    Alarm,
    MessageComResource,
    SharedDataResource,
    NotificationResource,
    MutualExclusionResource,
    MemoryBroker,
    Scheduler,
    DeviceBroker,
}

/// The three families the resource kinds fall into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResourceFamily {
    /// Concurrent execution contexts: tasks, partitions, interrupts, alarms.
    Concurrent,
    /// Communication and synchronization between concurrent contexts.
    Interaction,
    /// Management of other software and hardware resources.
    Broker,
}

impl ResourceKind {
    pub const ALL: &'static [ResourceKind] = &[
        ResourceKind::SwSchedulableResource,
        ResourceKind::MemoryPartition,
        ResourceKind::InterruptResource,
        ResourceKind::Alarm,
        ResourceKind::MessageComResource,
        ResourceKind::SharedDataResource,
        ResourceKind::NotificationResource,
        ResourceKind::MutualExclusionResource,
        ResourceKind::MemoryBroker,
        ResourceKind::Scheduler,
        ResourceKind::DeviceBroker,
    ];

    pub fn family(self) -> ResourceFamily {
        match self {
            ResourceKind::SwSchedulableResource
            | ResourceKind::MemoryPartition
            | ResourceKind::InterruptResource
            | ResourceKind::Alarm => ResourceFamily::Concurrent,
            ResourceKind::MessageComResource
            | ResourceKind::SharedDataResource
            | ResourceKind::NotificationResource
            | ResourceKind::MutualExclusionResource => ResourceFamily::Interaction,
            ResourceKind::MemoryBroker | ResourceKind::Scheduler | ResourceKind::DeviceBroker => {
                ResourceFamily::Broker
            }
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ResourceKind::SwSchedulableResource => "SwSchedulableResource",
            ResourceKind::MemoryPartition => "MemoryPartition",
            ResourceKind::InterruptResource => "InterruptResource",
            ResourceKind::Alarm => "Alarm",
            ResourceKind::MessageComResource => "MessageComResource",
            ResourceKind::SharedDataResource => "SharedDataResource",
            ResourceKind::NotificationResource => "NotificationResource",
            ResourceKind::MutualExclusionResource => "MutualExclusionResource",
            ResourceKind::MemoryBroker => "MemoryBroker",
            ResourceKind::Scheduler => "Scheduler",
            ResourceKind::DeviceBroker => "DeviceBroker",
        }
    }

    pub fn parse(s: &str) -> Option<ResourceKind> {
        Self::ALL.iter().copied().find(|k| k.as_str() == s)
    }
}

impl fmt::Display for ResourceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl ResourceFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            ResourceFamily::Concurrent => "Concurrent",
            ResourceFamily::Interaction => "Interaction",
            ResourceFamily::Broker => "Broker",
        }
    }
}

/// Activation pattern of a concurrent resource.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OccurrenceKind {
    Periodic,
    Aperiodic,
    Sporadic,
}

impl OccurrenceKind {
    pub const ALL: &'static [OccurrenceKind] = &[
        OccurrenceKind::Periodic,
        OccurrenceKind::Aperiodic,
        OccurrenceKind::Sporadic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OccurrenceKind::Periodic => "periodic",
            OccurrenceKind::Aperiodic => "aperiodic",
            OccurrenceKind::Sporadic => "sporadic",
        }
    }

    pub fn parse(s: &str) -> Option<OccurrenceKind> {
        Self::ALL.iter().copied().find(|k| k.as_str() == s)
    }
}

/// Value of an open "x-" classification tag: a boolean or an enum literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TagValue {
    Bool(bool),
    Literal(String),
}

impl TagValue {
    pub fn as_signature_string(&self) -> String {
        match self {
            TagValue::Bool(b) => b.to_string(),
            TagValue::Literal(l) => l.clone(),
        }
    }
}

/// Boolean/enum markers on a resource type, compared for equality during
/// matching. Distinct from role bindings, which are woven rather than
/// compared.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ClassificationTags {
    /// Only permitted on Concurrent-family resource types.
    pub occurrence_kind: Option<OccurrenceKind>,
    pub is_preemptable: Option<bool>,
    /// Open extension tags; every key starts with "x-".
    pub extra: BTreeMap<String, TagValue>,
}

impl ClassificationTags {
    pub fn is_empty(&self) -> bool {
        self.occurrence_kind.is_none() && self.is_preemptable.is_none() && self.extra.is_empty()
    }
}

/// A semantic role a resource-type feature can play.
///
/// The vocabulary is closed apart from "x-" extension roles. The variant
/// order here is the canonical serialization order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    PriorityElements,
    PeriodElements,
    StackSizeElements,
    ActivateServices,
    SuspendServices,
    ResumeServices,
    TerminateServices,
    EntryPoint,
    SendServices,
    ReceiveServices,
    AcquireServices,
    ReleaseServices,
    NotifyServices,
    WaitServices,
    /// Open extension role; the name carries its "x-" prefix.
    Extension(String),
}

/// Which feature category a role binds to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoleCategory {
    /// Binds to attribute names.
    Attribute,
    /// Binds to service names.
    Service,
    /// Used on instance dependencies; on a type it may bind any feature.
    Dependency,
    /// Extension roles may bind any declared feature.
    Extension,
}

impl Role {
    pub const CLOSED: &'static [Role] = &[
        Role::PriorityElements,
        Role::PeriodElements,
        Role::StackSizeElements,
        Role::ActivateServices,
        Role::SuspendServices,
        Role::ResumeServices,
        Role::TerminateServices,
        Role::EntryPoint,
        Role::SendServices,
        Role::ReceiveServices,
        Role::AcquireServices,
        Role::ReleaseServices,
        Role::NotifyServices,
        Role::WaitServices,
    ];

    pub fn as_str(&self) -> &str {
        match self {
            Role::PriorityElements => "priorityElements",
            Role::PeriodElements => "periodElements",
            Role::StackSizeElements => "stackSizeElements",
            Role::ActivateServices => "activateServices",
            Role::SuspendServices => "suspendServices",
            Role::ResumeServices => "resumeServices",
            Role::TerminateServices => "terminateServices",
            Role::EntryPoint => "entryPoint",
            Role::SendServices => "sendServices",
            Role::ReceiveServices => "receiveServices",
            Role::AcquireServices => "acquireServices",
            Role::ReleaseServices => "releaseServices",
            Role::NotifyServices => "notifyServices",
            Role::WaitServices => "waitServices",
            Role::Extension(name) => name,
        }
    }

    /// Parses a role name; "x-" prefixed identifiers become extension roles.
    pub fn parse(s: &str) -> Option<Role> {
        for role in Self::CLOSED {
            if role.as_str() == s {
                return Some(role.clone());
            }
        }
        if s.starts_with("x-") && is_identifier(s) {
            return Some(Role::Extension(s.to_string()));
        }
        None
    }

    pub fn category(&self) -> RoleCategory {
        match self {
            Role::PriorityElements | Role::PeriodElements | Role::StackSizeElements => {
                RoleCategory::Attribute
            }
            Role::EntryPoint => RoleCategory::Dependency,
            Role::Extension(_) => RoleCategory::Extension,
            _ => RoleCategory::Service,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A typed attribute of a resource type.
#[derive(Debug, Clone, PartialEq)]
pub struct AttributeDef {
    pub name: String,
    /// Name of a [`DataTypeDef`] in the owning platform.
    pub type_name: String,
    pub default: Option<Value>,
}

/// Signature of a service offered by a resource type.
#[derive(Debug, Clone, PartialEq)]
pub struct ServiceSignature {
    pub name: String,
    /// (parameter name, data-type name) in declaration order.
    pub params: Vec<(String, String)>,
    pub returns: Option<String>,
}

/// One concept offered by a platform, e.g. OSEK's BasicTask.
#[derive(Debug, Clone, PartialEq)]
pub struct ResourceType {
    pub name: String,
    pub kind: ResourceKind,
    pub tags: ClassificationTags,
    pub attributes: Vec<AttributeDef>,
    /// Every resource type offers at least one service.
    pub services: Vec<ServiceSignature>,
    /// Role bindings; a feature name may appear under several roles.
    pub roles: BTreeMap<Role, Vec<String>>,
}

impl ResourceType {
    pub fn attribute(&self, name: &str) -> Option<&AttributeDef> {
        self.attributes.iter().find(|a| a.name == name)
    }

    pub fn service(&self, name: &str) -> Option<&ServiceSignature> {
        self.services.iter().find(|s| s.name == name)
    }

    pub fn has_feature(&self, name: &str) -> bool {
        self.attribute(name).is_some() || self.service(name).is_some()
    }
}

/// Direction in which numeric priority values gain urgency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PriorityDirection {
    /// Larger numbers are more urgent.
    Ascending,
    /// Smaller numbers are more urgent.
    Descending,
}

impl PriorityDirection {
    pub fn as_str(self) -> &'static str {
        match self {
            PriorityDirection::Ascending => "ascending",
            PriorityDirection::Descending => "descending",
        }
    }

    pub fn parse(s: &str) -> Option<PriorityDirection> {
        match s {
            "ascending" => Some(PriorityDirection::Ascending),
            "descending" => Some(PriorityDirection::Descending),
            _ => None,
        }
    }
}

/// The inclusive numeric priority range of a platform together with its
/// urgency direction. `low` and `high` are numeric bounds, `low < high`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PriorityRange {
    pub low: i64,
    pub high: i64,
    pub direction: PriorityDirection,
}

impl PriorityRange {
    /// Numeric value carrying the lowest urgency.
    pub fn lowest_urgency_value(&self) -> i64 {
        match self.direction {
            PriorityDirection::Ascending => self.low,
            PriorityDirection::Descending => self.high,
        }
    }

    /// Numeric value carrying the highest urgency.
    pub fn highest_urgency_value(&self) -> i64 {
        match self.direction {
            PriorityDirection::Ascending => self.high,
            PriorityDirection::Descending => self.low,
        }
    }

    pub fn contains(&self, v: i64) -> bool {
        self.low <= v && v <= self.high
    }
}

/// A predefined, platform-owned instance such as OSEK's RES_SCHEDULER.
#[derive(Debug, Clone, PartialEq)]
pub struct PredefinedInstance {
    pub name: String,
    pub type_name: String,
}

/// A catalog of everything one execution platform offers through its API.
#[derive(Debug, Clone, PartialEq)]
pub struct PlatformModel {
    pub name: String,
    pub api_language: String,
    pub data_types: Vec<DataTypeDef>,
    pub resource_types: Vec<ResourceType>,
    pub predefined_instances: Vec<PredefinedInstance>,
    pub priority_range: Option<PriorityRange>,
}

impl PlatformModel {
    pub fn data_type(&self, name: &str) -> Option<&DataTypeDef> {
        self.data_types.iter().find(|d| d.name == name)
    }

    pub fn resource_type(&self, name: &str) -> Option<&ResourceType> {
        self.resource_types.iter().find(|r| r.name == name)
    }

    pub fn predefined_instance(&self, name: &str) -> Option<&PredefinedInstance> {
        self.predefined_instances.iter().find(|p| p.name == name)
    }
}

/// A concrete slot or tag value.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Uint(u64),
    Float(f64),
    Bool(bool),
    Str(String),
    EnumLit(String),
}

impl Value {
    pub fn base(&self) -> BaseType {
        match self {
            Value::Int(_) => BaseType::Int,
            Value::Uint(_) => BaseType::Uint,
            Value::Float(_) => BaseType::Float,
            Value::Bool(_) => BaseType::Bool,
            Value::Str(_) => BaseType::String,
            Value::EnumLit(_) => BaseType::Enum,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Uint(v) => write!(f, "{v}"),
            Value::Float(v) => write!(f, "{v}"),
            Value::Bool(v) => write!(f, "{v}"),
            Value::Str(v) => write!(f, "{v:?}"),
            Value::EnumLit(v) => write!(f, "{v}"),
        }
    }
}

/// Reference to an application element or a member of one: `owner` or
/// `owner.member`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DottedPath {
    pub owner: String,
    pub member: Option<String>,
}

impl DottedPath {
    /// Splits `owner[.member]`; both parts must be identifiers.
    pub fn parse(s: &str) -> Option<DottedPath> {
        match s.split_once('.') {
            None => is_identifier(s).then(|| DottedPath {
                owner: s.to_string(),
                member: None,
            }),
            Some((owner, member)) => {
                (is_identifier(owner) && is_identifier(member)).then(|| DottedPath {
                    owner: owner.to_string(),
                    member: Some(member.to_string()),
                })
            }
        }
    }
}

impl fmt::Display for DottedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.member {
            Some(m) => write!(f, "{}.{}", self.owner, m),
            None => f.write_str(&self.owner),
        }
    }
}

/// A dependency of a resource instance on another model element, e.g. the
/// entry-point routine a task executes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dependency {
    pub role: Role,
    pub target: DottedPath,
}

/// An application-level declaration of one resource instance.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceSpec {
    pub name: String,
    pub type_name: String,
    /// Attribute name -> value, in canonical (sorted) order.
    pub slots: BTreeMap<String, Value>,
    pub dependencies: Vec<Dependency>,
}

/// An application-owned element: a named unit with callable routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppElement {
    pub name: String,
    pub routines: Vec<String>,
}

/// An application-owned object typed by an [`AppElement`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppObject {
    pub name: String,
    pub element: String,
}

/// An application bound to one platform: its own elements plus instance
/// specifications of platform resource types.
#[derive(Debug, Clone, PartialEq)]
pub struct ApplicationModel {
    pub name: String,
    pub platform_name: String,
    pub app_elements: Vec<AppElement>,
    pub app_objects: Vec<AppObject>,
    pub resource_instances: Vec<InstanceSpec>,
}

impl ApplicationModel {
    pub fn app_element(&self, name: &str) -> Option<&AppElement> {
        self.app_elements.iter().find(|e| e.name == name)
    }

    pub fn app_object(&self, name: &str) -> Option<&AppObject> {
        self.app_objects.iter().find(|o| o.name == name)
    }

    pub fn resource_instance(&self, name: &str) -> Option<&InstanceSpec> {
        self.resource_instances.iter().find(|i| i.name == name)
    }
}

/// Why a value fails to conform to a data type.
#[derive(Debug, Clone, PartialEq)]
pub enum ValueCheckError {
    BaseMismatch { expected: BaseType, found: BaseType },
    OutOfRange { detail: String },
    UnknownLiteral { literal: String, type_name: String },
}

impl fmt::Display for ValueCheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueCheckError::BaseMismatch { expected, found } => {
                write!(f, "expected a {expected} value, found {found}")
            }
            ValueCheckError::OutOfRange { detail } => f.write_str(detail),
            ValueCheckError::UnknownLiteral { literal, type_name } => {
                write!(f, "'{literal}' is not a literal of enum type '{type_name}'")
            }
        }
    }
}

/// Inclusive bounds implied by a signed bit width (1..=64).
pub fn int_bounds(bits: u32) -> (i128, i128) {
    let b = bits.min(64);
    (-(1i128 << (b - 1)), (1i128 << (b - 1)) - 1)
}

/// Inclusive upper bound implied by an unsigned bit width (1..=64).
pub fn uint_max(bits: u32) -> u128 {
    (1u128 << bits.min(64)) - 1
}

/// Checks that a value conforms to a data type: identical base, within the
/// bit-width bound, within the declared range, and (for enums) a declared
/// literal. Bases must match exactly; cross-base coercion is the converter's
/// job, not the type checker's.
pub fn check_value(v: &Value, dt: &DataTypeDef) -> Result<(), ValueCheckError> {
    let mismatch = || ValueCheckError::BaseMismatch {
        expected: dt.base,
        found: v.base(),
    };
    match (v, dt.base) {
        (Value::Int(i), BaseType::Int) => {
            if let Some(bits) = dt.bits {
                let (min, max) = int_bounds(bits);
                if (*i as i128) < min || (*i as i128) > max {
                    return Err(out_of_width(&v.to_string(), dt));
                }
            }
            check_range(*i as f64, v, dt)
        }
        (Value::Uint(u), BaseType::Uint) => {
            if let Some(bits) = dt.bits {
                if (*u as u128) > uint_max(bits) {
                    return Err(out_of_width(&v.to_string(), dt));
                }
            }
            check_range(*u as f64, v, dt)
        }
        (Value::Float(x), BaseType::Float) => {
            if !x.is_finite() {
                return Err(ValueCheckError::OutOfRange {
                    detail: "non-finite float values are not representable".to_string(),
                });
            }
            if dt.bits == Some(32) && x.abs() > f64::from(f32::MAX) {
                return Err(out_of_width(&v.to_string(), dt));
            }
            check_range(*x, v, dt)
        }
        (Value::Bool(_), BaseType::Bool) => Ok(()),
        (Value::Str(_), BaseType::String) => Ok(()),
        (Value::EnumLit(l), BaseType::Enum) => {
            if dt.enum_literals.iter().any(|lit| lit == l) {
                Ok(())
            } else {
                Err(ValueCheckError::UnknownLiteral {
                    literal: l.clone(),
                    type_name: dt.name.clone(),
                })
            }
        }
        _ => Err(mismatch()),
    }
}

fn out_of_width(value: &str, dt: &DataTypeDef) -> ValueCheckError {
    ValueCheckError::OutOfRange {
        detail: format!("{value} does not fit in {} bits of '{}'", dt.bits.unwrap(), dt.name),
    }
}

fn check_range(x: f64, v: &Value, dt: &DataTypeDef) -> Result<(), ValueCheckError> {
    match dt.range {
        Some((min, max)) if x < min || x > max => Err(ValueCheckError::OutOfRange {
            detail: format!("{v} is outside the declared range [{min}, {max}] of '{}'", dt.name),
        }),
        _ => Ok(()),
    }
}

/// True for names of model elements: a letter or underscore followed by
/// letters, digits, `_` or `-`.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// Binding list of `role` on `rt`, in declaration order. Unbound roles
/// yield an empty list.
pub fn role_features<'a>(rt: &'a ResourceType, role: &Role) -> &'a [String] {
    rt.roles.get(role).map(Vec::as_slice).unwrap_or(&[])
}

/// Canonical (tag-name, value) list of every present classification tag,
/// sorted by tag name. Two resource types match structurally iff their
/// kinds and classification signatures are equal.
pub fn classification_signature(rt: &ResourceType) -> Vec<(String, String)> {
    let mut sig = Vec::new();
    if let Some(kind) = rt.tags.occurrence_kind {
        sig.push(("occurrenceKind".to_string(), kind.as_str().to_string()));
    }
    if let Some(p) = rt.tags.is_preemptable {
        sig.push(("isPreemptable".to_string(), p.to_string()));
    }
    for (key, value) in &rt.tags.extra {
        sig.push((key.clone(), value.as_signature_string()));
    }
    sig.sort();
    sig
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn task_type() -> ResourceType {
        let mut roles = BTreeMap::new();
        roles.insert(
            Role::PriorityElements,
            vec!["Priority".to_string()],
        );
        roles.insert(
            Role::ActivateServices,
            vec!["ActivateTask".to_string(), "ChainTask".to_string()],
        );
        roles.insert(
            Role::TerminateServices,
            vec!["TerminateTask".to_string(), "ChainTask".to_string()],
        );
        ResourceType {
            name: "BasicTask".to_string(),
            kind: ResourceKind::SwSchedulableResource,
            tags: ClassificationTags {
                occurrence_kind: Some(OccurrenceKind::Aperiodic),
                ..Default::default()
            },
            attributes: vec![AttributeDef {
                name: "Priority".to_string(),
                type_name: "int32".to_string(),
                default: None,
            }],
            services: vec![
                ServiceSignature {
                    name: "ActivateTask".to_string(),
                    params: vec![],
                    returns: None,
                },
                ServiceSignature {
                    name: "TerminateTask".to_string(),
                    params: vec![],
                    returns: None,
                },
                ServiceSignature {
                    name: "ChainTask".to_string(),
                    params: vec![],
                    returns: None,
                },
            ],
            roles,
        }
    }

    #[test]
    fn chain_task_is_bound_under_both_lifecycle_roles() {
        let rt = task_type();
        assert_eq!(
            role_features(&rt, &Role::TerminateServices),
            ["TerminateTask", "ChainTask"]
        );
        assert_eq!(
            role_features(&rt, &Role::ActivateServices),
            ["ActivateTask", "ChainTask"]
        );
    }

    #[test]
    fn unbound_role_yields_empty_list() {
        let rt = task_type();
        let role = Role::parse("x-unbound").unwrap();
        assert!(role_features(&rt, &role).is_empty());
        assert!(role_features(&rt, &Role::WaitServices).is_empty());
    }

    #[test]
    fn signature_of_single_tag_type() {
        let rt = task_type();
        assert_eq!(
            classification_signature(&rt),
            [("occurrenceKind".to_string(), "aperiodic".to_string())]
        );
    }

    #[test]
    fn signature_of_untagged_type_is_empty() {
        let mut rt = task_type();
        rt.tags = ClassificationTags::default();
        assert!(classification_signature(&rt).is_empty());
    }

    #[test]
    fn signature_sorts_by_tag_name() {
        let mut rt = task_type();
        rt.tags = ClassificationTags {
            occurrence_kind: Some(OccurrenceKind::Periodic),
            is_preemptable: Some(true),
            extra: BTreeMap::new(),
        };
        assert_eq!(
            classification_signature(&rt),
            [
                ("isPreemptable".to_string(), "true".to_string()),
                ("occurrenceKind".to_string(), "periodic".to_string()),
            ]
        );
    }

    #[test]
    fn role_parsing_round_trips_closed_vocabulary() {
        for role in Role::CLOSED {
            assert_eq!(Role::parse(role.as_str()).as_ref(), Some(role));
        }
        assert_eq!(Role::parse("x-budget"), Some(Role::Extension("x-budget".into())));
        assert_eq!(Role::parse("priorityelements"), None);
        assert_eq!(Role::parse("y-custom"), None);
    }

    #[test]
    fn kind_families_follow_the_taxonomy() {
        use ResourceFamily::*;
        let expect = [
            (ResourceKind::SwSchedulableResource, Concurrent),
            (ResourceKind::MemoryPartition, Concurrent),
            (ResourceKind::InterruptResource, Concurrent),
            (ResourceKind::Alarm, Concurrent),
            (ResourceKind::MessageComResource, Interaction),
            (ResourceKind::SharedDataResource, Interaction),
            (ResourceKind::NotificationResource, Interaction),
            (ResourceKind::MutualExclusionResource, Interaction),
            (ResourceKind::MemoryBroker, Broker),
            (ResourceKind::Scheduler, Broker),
            (ResourceKind::DeviceBroker, Broker),
        ];
        assert_eq!(ResourceKind::ALL.len(), 11);
        for (kind, family) in expect {
            assert_eq!(kind.family(), family, "{kind}");
        }
    }

    #[test]
    fn priority_range_urgency_endpoints_respect_direction() {
        let asc = PriorityRange {
            low: 0,
            high: 15,
            direction: PriorityDirection::Ascending,
        };
        assert_eq!(asc.lowest_urgency_value(), 0);
        assert_eq!(asc.highest_urgency_value(), 15);
        let desc = PriorityRange {
            low: 0,
            high: 15,
            direction: PriorityDirection::Descending,
        };
        assert_eq!(desc.lowest_urgency_value(), 15);
        assert_eq!(desc.highest_urgency_value(), 0);
    }

    #[test]
    fn dotted_path_parsing() {
        let p = DottedPath::parse("C1.trajectoryControl").unwrap();
        assert_eq!(p.owner, "C1");
        assert_eq!(p.member.as_deref(), Some("trajectoryControl"));
        assert_eq!(p.to_string(), "C1.trajectoryControl");
        assert!(DottedPath::parse("C1").unwrap().member.is_none());
        assert!(DottedPath::parse("a.b.c").is_none());
        assert!(DottedPath::parse(".b").is_none());
        assert!(DottedPath::parse("").is_none());
    }

    fn extra_tag_strategy() -> impl Strategy<Value = (String, TagValue)> {
        let key = prop::sample::select(vec![
            "x-alpha".to_string(),
            "x-beta".to_string(),
            "x-gamma".to_string(),
            "x-delta".to_string(),
        ]);
        let value = prop_oneof![
            any::<bool>().prop_map(TagValue::Bool),
            prop::sample::select(vec!["red", "green", "blue"])
                .prop_map(|l| TagValue::Literal(l.to_string())),
        ];
        (key, value)
    }

    proptest! {
        // Permuting tag declaration order never changes the signature.
        #[test]
        fn signature_is_insertion_order_independent(
            tags in prop::collection::vec(extra_tag_strategy(), 0..6),
            occurrence in prop::option::of(prop::sample::select(OccurrenceKind::ALL.to_vec())),
            preemptable in prop::option::of(any::<bool>()),
            seed in any::<u64>(),
        ) {
            let build = |order: &[(String, TagValue)]| {
                let mut rt = task_type();
                rt.tags = ClassificationTags {
                    occurrence_kind: occurrence,
                    is_preemptable: preemptable,
                    extra: order.iter().cloned().collect(),
                };
                classification_signature(&rt)
            };
            let mut permuted = tags.clone();
            // cheap deterministic shuffle
            if !permuted.is_empty() {
                let n = permuted.len();
                for i in 0..n {
                    let j = (seed as usize).wrapping_mul(31).wrapping_add(i * 7) % n;
                    permuted.swap(i, j);
                }
            }
            prop_assert_eq!(build(&tags), build(&permuted));
        }

        // role_features is always a sub-list of declared features, in order.
        #[test]
        fn role_features_is_an_ordered_sublist(subset in prop::collection::vec(any::<bool>(), 3)) {
            let all = ["ActivateTask", "TerminateTask", "ChainTask"];
            let chosen: Vec<String> = all
                .iter()
                .zip(&subset)
                .filter(|(_, keep)| **keep)
                .map(|(n, _)| n.to_string())
                .collect();
            let mut rt = task_type();
            rt.roles.insert(Role::Extension("x-probe".into()), chosen.clone());
            let got = role_features(&rt, &Role::Extension("x-probe".into()));
            prop_assert_eq!(got, chosen.as_slice());
            // order preserved relative to declaration order of services
            let idx: Vec<usize> = got
                .iter()
                .map(|n| all.iter().position(|a| a == n).unwrap())
                .collect();
            prop_assert!(idx.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
