//! Well-formedness checks for platform models and conformance checks for
//! applications against their platform.
//!
//! Diagnostics carry stable codes (V0xx platform, V1xx application), a
//! dotted subject path to the offending element, and are sorted by
//! (subject, code). The empty list means the model passed every check,
//! warnings included.

use std::collections::BTreeSet;
use std::fmt;

use crate::io::Severity;
use crate::model::{
    check_value, role_features, ApplicationModel, DottedPath, PlatformModel, ResourceFamily,
    ResourceType, Role,
};

/// Stable validation codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ValidationCode {
    /// V001: a resource type offering zero services.
    NoServices,
    /// V002: a role binding naming a missing or mis-categorized feature.
    BadRoleBinding,
    /// V003: occurrenceKind on a non-Concurrent resource kind.
    MisplacedOccurrenceKind,
    /// V004: periodElements bound while occurrenceKind is not periodic.
    PeriodWithoutPeriodic,
    /// V005: a reference to a data type the platform does not declare.
    UnresolvedDataType,
    /// V006: a predefined instance of an unknown resource type.
    UnknownPredefinedType,
    /// V007: a Concurrent-family type with neither activateServices nor an
    /// entryPoint capability.
    NoActivation,
    /// V008: a name declared twice in one namespace.
    DuplicateName,
    /// V009: an attribute default that fails its own data type.
    BadDefault,
    /// V101: the application names a different platform.
    PlatformMismatch,
    /// V102: an instance of a type the platform does not declare.
    UnknownInstanceType,
    /// V103: a slot naming no attribute of the instance type.
    UnknownSlot,
    /// V104: a slot value failing the attribute's data type.
    SlotTypeMismatch,
    /// V105: a dependency target that resolves nowhere.
    UnresolvedDependency,
    /// V106: an entryPoint dependency on a non-Concurrent instance.
    EntryPointOnNonConcurrent,
}

impl ValidationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ValidationCode::NoServices => "V001",
            ValidationCode::BadRoleBinding => "V002",
            ValidationCode::MisplacedOccurrenceKind => "V003",
            ValidationCode::PeriodWithoutPeriodic => "V004",
            ValidationCode::UnresolvedDataType => "V005",
            ValidationCode::UnknownPredefinedType => "V006",
            ValidationCode::NoActivation => "V007",
            ValidationCode::DuplicateName => "V008",
            ValidationCode::BadDefault => "V009",
            ValidationCode::PlatformMismatch => "V101",
            ValidationCode::UnknownInstanceType => "V102",
            ValidationCode::UnknownSlot => "V103",
            ValidationCode::SlotTypeMismatch => "V104",
            ValidationCode::UnresolvedDependency => "V105",
            ValidationCode::EntryPointOnNonConcurrent => "V106",
        }
    }

    pub fn severity(self) -> Severity {
        match self {
            ValidationCode::PeriodWithoutPeriodic
            | ValidationCode::NoActivation
            | ValidationCode::EntryPointOnNonConcurrent => Severity::Warning,
            _ => Severity::Error,
        }
    }
}

impl fmt::Display for ValidationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One finding of the validator. Rendered as
/// `SEVERITY CODE subject: message`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationDiagnostic {
    pub severity: Severity,
    pub code: ValidationCode,
    pub subject: String,
    pub message: String,
}

impl ValidationDiagnostic {
    fn new(code: ValidationCode, subject: impl Into<String>, message: impl Into<String>) -> Self {
        ValidationDiagnostic {
            severity: code.severity(),
            code,
            subject: subject.into(),
            message: message.into(),
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for ValidationDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}: {}",
            self.severity, self.code, self.subject, self.message
        )
    }
}

fn sorted(mut diags: Vec<ValidationDiagnostic>) -> Vec<ValidationDiagnostic> {
    diags.sort_by(|a, b| {
        (&a.subject, a.code, &a.message).cmp(&(&b.subject, b.code, &b.message))
    });
    diags
}

/// Checks every platform usage rule. Empty result means the platform is
/// clean, warnings included.
pub fn validate_platform(p: &PlatformModel) -> Vec<ValidationDiagnostic> {
    let mut out = Vec::new();

    let mut dt_names = BTreeSet::new();
    for dt in &p.data_types {
        if !dt_names.insert(dt.name.as_str()) {
            out.push(ValidationDiagnostic::new(
                ValidationCode::DuplicateName,
                format!("dataTypes.{}", dt.name),
                format!("data type '{}' is declared twice", dt.name),
            ));
        }
    }

    let mut rt_names = BTreeSet::new();
    for rt in &p.resource_types {
        if !rt_names.insert(rt.name.as_str()) {
            out.push(ValidationDiagnostic::new(
                ValidationCode::DuplicateName,
                format!("resourceTypes.{}", rt.name),
                format!("resource type '{}' is declared twice", rt.name),
            ));
        }
        validate_resource_type(p, rt, &mut out);
    }

    let mut pi_names = BTreeSet::new();
    for pi in &p.predefined_instances {
        let subject = format!("predefinedInstances.{}", pi.name);
        if !pi_names.insert(pi.name.as_str()) {
            out.push(ValidationDiagnostic::new(
                ValidationCode::DuplicateName,
                subject.clone(),
                format!("predefined instance '{}' is declared twice", pi.name),
            ));
        }
        if p.resource_type(&pi.type_name).is_none() {
            out.push(ValidationDiagnostic::new(
                ValidationCode::UnknownPredefinedType,
                subject,
                format!("'{}' is not a resource type of this platform", pi.type_name),
            ));
        }
    }

    sorted(out)
}

fn validate_resource_type(
    p: &PlatformModel,
    rt: &ResourceType,
    out: &mut Vec<ValidationDiagnostic>,
) {
    let subject = format!("resourceTypes.{}", rt.name);

    if rt.services.is_empty() {
        out.push(ValidationDiagnostic::new(
            ValidationCode::NoServices,
            subject.clone(),
            "a resource type must offer at least one service",
        ));
    }

    let mut feature_names: BTreeSet<&str> = BTreeSet::new();
    for attr in &rt.attributes {
        if !feature_names.insert(attr.name.as_str()) {
            out.push(ValidationDiagnostic::new(
                ValidationCode::DuplicateName,
                format!("{subject}.attributes.{}", attr.name),
                format!("feature name '{}' is declared twice", attr.name),
            ));
        }
        match p.data_type(&attr.type_name) {
            None => out.push(ValidationDiagnostic::new(
                ValidationCode::UnresolvedDataType,
                format!("{subject}.attributes.{}", attr.name),
                format!("attribute type '{}' is not declared", attr.type_name),
            )),
            Some(dt) => {
                if let Some(default) = &attr.default {
                    if let Err(err) = check_value(default, dt) {
                        out.push(ValidationDiagnostic::new(
                            ValidationCode::BadDefault,
                            format!("{subject}.attributes.{}", attr.name),
                            format!("default value: {err}"),
                        ));
                    }
                }
            }
        }
    }
    for svc in &rt.services {
        if !feature_names.insert(svc.name.as_str()) {
            out.push(ValidationDiagnostic::new(
                ValidationCode::DuplicateName,
                format!("{subject}.services.{}", svc.name),
                format!("feature name '{}' is declared twice", svc.name),
            ));
        }
        for (pname, ptype) in &svc.params {
            if p.data_type(ptype).is_none() {
                out.push(ValidationDiagnostic::new(
                    ValidationCode::UnresolvedDataType,
                    format!("{subject}.services.{}", svc.name),
                    format!("parameter '{pname}' references undeclared data type '{ptype}'"),
                ));
            }
        }
        if let Some(ret) = &svc.returns {
            if p.data_type(ret).is_none() {
                out.push(ValidationDiagnostic::new(
                    ValidationCode::UnresolvedDataType,
                    format!("{subject}.services.{}", svc.name),
                    format!("return type '{ret}' is not declared"),
                ));
            }
        }
    }

    for (role, features) in &rt.roles {
        for feature in features {
            let is_attr = rt.attribute(feature).is_some();
            let is_svc = rt.service(feature).is_some();
            let ok = match role.category() {
                crate::model::RoleCategory::Attribute => is_attr,
                crate::model::RoleCategory::Service => is_svc,
                _ => is_attr || is_svc,
            };
            if !ok {
                let expected = match role.category() {
                    crate::model::RoleCategory::Attribute => "an attribute",
                    crate::model::RoleCategory::Service => "a service",
                    _ => "a feature",
                };
                out.push(ValidationDiagnostic::new(
                    ValidationCode::BadRoleBinding,
                    format!("{subject}.roles.{role}"),
                    format!("'{feature}' is not {expected} of this resource type"),
                ));
            }
        }
    }

    let family = rt.kind.family();
    if rt.tags.occurrence_kind.is_some() && family != ResourceFamily::Concurrent {
        out.push(ValidationDiagnostic::new(
            ValidationCode::MisplacedOccurrenceKind,
            format!("{subject}.tags.occurrenceKind"),
            format!(
                "occurrenceKind is only allowed on Concurrent-family kinds, not {}",
                rt.kind
            ),
        ));
    }

    let periodic = rt.tags.occurrence_kind == Some(crate::model::OccurrenceKind::Periodic);
    if !role_features(rt, &Role::PeriodElements).is_empty() && !periodic {
        out.push(ValidationDiagnostic::new(
            ValidationCode::PeriodWithoutPeriodic,
            format!("{subject}.roles.periodElements"),
            "periodElements is bound but occurrenceKind is not periodic",
        ));
    }

    if family == ResourceFamily::Concurrent
        && role_features(rt, &Role::ActivateServices).is_empty()
        && role_features(rt, &Role::EntryPoint).is_empty()
    {
        out.push(ValidationDiagnostic::new(
            ValidationCode::NoActivation,
            subject,
            "a Concurrent-family type should bind activateServices or entryPoint",
        ));
    }
}

/// Checks an application against the platform it claims to be bound to.
pub fn validate_application(
    a: &ApplicationModel,
    p: &PlatformModel,
) -> Vec<ValidationDiagnostic> {
    let mut out = Vec::new();

    if a.platform_name != p.name {
        out.push(ValidationDiagnostic::new(
            ValidationCode::PlatformMismatch,
            "platform",
            format!(
                "application is bound to '{}' but was validated against '{}'",
                a.platform_name, p.name
            ),
        ));
    }

    for inst in &a.resource_instances {
        let subject = format!("instances.{}", inst.name);
        let rt = p.resource_type(&inst.type_name);
        if rt.is_none() {
            out.push(ValidationDiagnostic::new(
                ValidationCode::UnknownInstanceType,
                subject.clone(),
                format!("'{}' is not a resource type of platform '{}'", inst.type_name, p.name),
            ));
        }

        if let Some(rt) = rt {
            for (slot, value) in &inst.slots {
                let slot_subject = format!("{subject}.slots.{slot}");
                match rt.attribute(slot) {
                    None => out.push(ValidationDiagnostic::new(
                        ValidationCode::UnknownSlot,
                        slot_subject,
                        format!("'{slot}' is not an attribute of '{}'", rt.name),
                    )),
                    Some(attr) => {
                        if let Some(dt) = p.data_type(&attr.type_name) {
                            if let Err(err) = check_value(value, dt) {
                                out.push(ValidationDiagnostic::new(
                                    ValidationCode::SlotTypeMismatch,
                                    slot_subject,
                                    err.to_string(),
                                ));
                            }
                        }
                    }
                }
            }
        }

        for (j, dep) in inst.dependencies.iter().enumerate() {
            let dep_subject = format!("{subject}.dependencies.{j}");
            if !resolve_target(a, p, &dep.target) {
                out.push(ValidationDiagnostic::new(
                    ValidationCode::UnresolvedDependency,
                    dep_subject.clone(),
                    format!("'{}' resolves to nothing in this application or platform", dep.target),
                ));
            }
            if dep.role == Role::EntryPoint {
                if let Some(rt) = rt {
                    if rt.kind.family() != ResourceFamily::Concurrent {
                        out.push(ValidationDiagnostic::new(
                            ValidationCode::EntryPointOnNonConcurrent,
                            dep_subject,
                            format!(
                                "entryPoint dependency on an instance of {} '{}'",
                                rt.kind, rt.name
                            ),
                        ));
                    }
                }
            }
        }
    }

    sorted(out)
}

/// Resolution rule for dependency targets: application-owned names first
/// (elements, objects, resource instances), then predefined instances of
/// the platform. A member must be a routine of the element (directly or
/// through an object) or a feature of the instance's resource type.
pub fn resolve_target(a: &ApplicationModel, p: &PlatformModel, target: &DottedPath) -> bool {
    let owner = target.owner.as_str();
    if let Some(el) = a.app_element(owner) {
        return match &target.member {
            None => true,
            Some(m) => el.routines.iter().any(|r| r == m),
        };
    }
    if let Some(obj) = a.app_object(owner) {
        return match &target.member {
            None => true,
            Some(m) => a
                .app_element(&obj.element)
                .is_some_and(|el| el.routines.iter().any(|r| r == m)),
        };
    }
    if let Some(inst) = a.resource_instance(owner) {
        return match &target.member {
            None => true,
            Some(m) => p.resource_type(&inst.type_name).is_some_and(|rt| rt.has_feature(m)),
        };
    }
    if let Some(pre) = p.predefined_instance(owner) {
        return match &target.member {
            None => true,
            Some(m) => p.resource_type(&pre.type_name).is_some_and(|rt| rt.has_feature(m)),
        };
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::*;
    use std::collections::BTreeMap;

    fn tiny_platform() -> PlatformModel {
        PlatformModel {
            name: "tiny".to_string(),
            api_language: "C".to_string(),
            data_types: vec![
                DataTypeDef { bits: Some(32), ..DataTypeDef::plain("int32", BaseType::Int) },
                DataTypeDef { bits: Some(8), ..DataTypeDef::plain("uint8", BaseType::Uint) },
            ],
            resource_types: vec![ResourceType {
                name: "Task".to_string(),
                kind: ResourceKind::SwSchedulableResource,
                tags: ClassificationTags {
                    occurrence_kind: Some(OccurrenceKind::Aperiodic),
                    ..Default::default()
                },
                attributes: vec![AttributeDef {
                    name: "prio".to_string(),
                    type_name: "int32".to_string(),
                    default: None,
                }],
                services: vec![ServiceSignature {
                    name: "start".to_string(),
                    params: vec![],
                    returns: None,
                }],
                roles: BTreeMap::from([
                    (Role::PriorityElements, vec!["prio".to_string()]),
                    (Role::ActivateServices, vec!["start".to_string()]),
                ]),
            }],
            predefined_instances: vec![],
            priority_range: None,
        }
    }

    fn codes(diags: &[ValidationDiagnostic]) -> Vec<&'static str> {
        diags.iter().map(|d| d.code.as_str()).collect()
    }

    #[test]
    fn clean_platform_yields_no_diagnostics() {
        assert_eq!(validate_platform(&tiny_platform()), []);
    }

    #[test]
    fn serviceless_type_is_v001() {
        let mut p = tiny_platform();
        p.resource_types[0].services.clear();
        p.resource_types[0].roles.clear();
        let diags = validate_platform(&p);
        // losing the services also loses the activation capability
        assert_eq!(codes(&diags), ["V001", "V007"]);
    }

    #[test]
    fn occurrence_kind_on_interaction_kind_is_v003() {
        let mut p = tiny_platform();
        p.resource_types[0].kind = ResourceKind::MessageComResource;
        p.resource_types[0].tags.occurrence_kind = Some(OccurrenceKind::Periodic);
        let diags = validate_platform(&p);
        assert_eq!(codes(&diags), ["V003"]);
        assert_eq!(diags[0].subject, "resourceTypes.Task.tags.occurrenceKind");
    }

    #[test]
    fn period_binding_without_periodic_tag_warns_v004() {
        let mut p = tiny_platform();
        p.resource_types[0]
            .roles
            .insert(Role::PeriodElements, vec!["prio".to_string()]);
        let diags = validate_platform(&p);
        assert_eq!(codes(&diags), ["V004"]);
        assert_eq!(diags[0].severity, Severity::Warning);
    }

    #[test]
    fn unresolved_attribute_type_is_v005() {
        let mut p = tiny_platform();
        p.resource_types[0].attributes[0].type_name = "nosuch".to_string();
        assert_eq!(codes(&validate_platform(&p)), ["V005"]);
    }

    #[test]
    fn unknown_predefined_type_is_v006() {
        let mut p = tiny_platform();
        p.predefined_instances.push(PredefinedInstance {
            name: "SYS".to_string(),
            type_name: "nosuch".to_string(),
        });
        assert_eq!(codes(&validate_platform(&p)), ["V006"]);
    }

    #[test]
    fn concurrent_type_without_activation_warns_v007() {
        let mut p = tiny_platform();
        p.resource_types[0].roles.remove(&Role::ActivateServices);
        let diags = validate_platform(&p);
        assert_eq!(codes(&diags), ["V007"]);
        // binding entryPoint instead silences it
        p.resource_types[0]
            .roles
            .insert(Role::EntryPoint, vec!["start".to_string()]);
        assert_eq!(validate_platform(&p), []);
    }

    #[test]
    fn misbound_role_is_v002_and_duplicate_feature_v008() {
        let mut p = tiny_platform();
        p.resource_types[0]
            .roles
            .insert(Role::TerminateServices, vec!["prio".to_string()]);
        p.resource_types[0].attributes.push(AttributeDef {
            name: "start".to_string(),
            type_name: "int32".to_string(),
            default: None,
        });
        let diags = validate_platform(&p);
        assert_eq!(codes(&diags), ["V008", "V002"]);
    }

    #[test]
    fn bad_default_is_v009() {
        let mut p = tiny_platform();
        p.resource_types[0].attributes[0].default = Some(Value::Uint(3));
        assert_eq!(codes(&validate_platform(&p)), ["V009"]);
    }

    fn tiny_app() -> ApplicationModel {
        ApplicationModel {
            name: "app".to_string(),
            platform_name: "tiny".to_string(),
            app_elements: vec![AppElement {
                name: "C".to_string(),
                routines: vec!["run".to_string()],
            }],
            app_objects: vec![AppObject {
                name: "C1".to_string(),
                element: "C".to_string(),
            }],
            resource_instances: vec![InstanceSpec {
                name: "t1".to_string(),
                type_name: "Task".to_string(),
                slots: BTreeMap::from([("prio".to_string(), Value::Int(3))]),
                dependencies: vec![Dependency {
                    role: Role::EntryPoint,
                    target: DottedPath::parse("C1.run").unwrap(),
                }],
            }],
        }
    }

    #[test]
    fn clean_application_yields_no_diagnostics() {
        assert_eq!(validate_application(&tiny_app(), &tiny_platform()), []);
    }

    #[test]
    fn platform_name_mismatch_is_v101() {
        let mut a = tiny_app();
        a.platform_name = "other".to_string();
        assert_eq!(codes(&validate_application(&a, &tiny_platform())), ["V101"]);
    }

    #[test]
    fn unknown_instance_type_is_v102() {
        let mut a = tiny_app();
        a.resource_instances[0].type_name = "Ghost".to_string();
        assert_eq!(codes(&validate_application(&a, &tiny_platform())), ["V102"]);
    }

    #[test]
    fn unknown_slot_is_v103_and_wrong_value_v104() {
        let mut a = tiny_app();
        a.resource_instances[0]
            .slots
            .insert("ghost".to_string(), Value::Int(1));
        a.resource_instances[0]
            .slots
            .insert("prio".to_string(), Value::Str("high".to_string()));
        let diags = validate_application(&a, &tiny_platform());
        assert_eq!(codes(&diags), ["V103", "V104"]);
    }

    #[test]
    fn unresolved_dependency_is_v105() {
        let mut a = tiny_app();
        a.resource_instances[0].dependencies[0].target =
            DottedPath::parse("C9.run").unwrap();
        assert_eq!(codes(&validate_application(&a, &tiny_platform())), ["V105"]);
    }

    #[test]
    fn dependency_resolution_matches_exhaustive_name_scan() {
        // Oracle: resolve by scanning every name the model declares.
        let a = tiny_app();
        let p = tiny_platform();
        let candidates = [
            "C", "C1", "t1", "ghost", "C.run", "C.walk", "C1.run", "C1.walk", "t1.prio",
            "t1.start", "t1.ghost", "C9.run",
        ];
        for cand in candidates {
            let path = DottedPath::parse(cand).unwrap();
            let oracle = {
                let owner_names: Vec<(&str, Vec<String>)> = a
                    .app_elements
                    .iter()
                    .map(|e| (e.name.as_str(), e.routines.clone()))
                    .chain(a.app_objects.iter().map(|o| {
                        let routines = a
                            .app_element(&o.element)
                            .map(|e| e.routines.clone())
                            .unwrap_or_default();
                        (o.name.as_str(), routines)
                    }))
                    .chain(a.resource_instances.iter().map(|i| {
                        let feats = p
                            .resource_type(&i.type_name)
                            .map(|rt| {
                                rt.attributes
                                    .iter()
                                    .map(|x| x.name.clone())
                                    .chain(rt.services.iter().map(|s| s.name.clone()))
                                    .collect()
                            })
                            .unwrap_or_default();
                        (i.name.as_str(), feats)
                    }))
                    .chain(p.predefined_instances.iter().map(|pi| {
                        let feats = p
                            .resource_type(&pi.type_name)
                            .map(|rt| {
                                rt.attributes
                                    .iter()
                                    .map(|x| x.name.clone())
                                    .chain(rt.services.iter().map(|s| s.name.clone()))
                                    .collect()
                            })
                            .unwrap_or_default();
                        (pi.name.as_str(), feats)
                    }))
                    .collect();
                owner_names.iter().any(|(name, members)| {
                    *name == path.owner
                        && match &path.member {
                            None => true,
                            Some(m) => members.contains(m),
                        }
                })
            };
            assert_eq!(resolve_target(&a, &p, &path), oracle, "target {cand}");
        }
    }

    #[test]
    fn entry_point_on_interaction_instance_warns_v106() {
        let mut p = tiny_platform();
        p.resource_types.push(ResourceType {
            name: "Queue".to_string(),
            kind: ResourceKind::MessageComResource,
            tags: ClassificationTags::default(),
            attributes: vec![],
            services: vec![ServiceSignature {
                name: "send".to_string(),
                params: vec![],
                returns: None,
            }],
            roles: BTreeMap::new(),
        });
        let mut a = tiny_app();
        a.resource_instances.push(InstanceSpec {
            name: "q1".to_string(),
            type_name: "Queue".to_string(),
            slots: BTreeMap::new(),
            dependencies: vec![Dependency {
                role: Role::EntryPoint,
                target: DottedPath::parse("C1.run").unwrap(),
            }],
        });
        let diags = validate_application(&a, &p);
        assert_eq!(codes(&diags), ["V106"]);
        assert_eq!(diags[0].severity, Severity::Warning);
    }

    #[test]
    fn removing_the_subject_removes_the_diagnostic() {
        // Monotonicity, checked on a fixture carrying several findings.
        let mut p = tiny_platform();
        p.resource_types.push(ResourceType {
            name: "Empty".to_string(),
            kind: ResourceKind::SharedDataResource,
            tags: ClassificationTags::default(),
            attributes: vec![],
            services: vec![],
            roles: BTreeMap::new(),
        });
        p.predefined_instances.push(PredefinedInstance {
            name: "SYS".to_string(),
            type_name: "nosuch".to_string(),
        });
        let before = validate_platform(&p);
        assert!(before.iter().any(|d| d.subject == "resourceTypes.Empty"));
        assert!(before.iter().any(|d| d.subject == "predefinedInstances.SYS"));

        p.resource_types.pop();
        let after = validate_platform(&p);
        assert!(after.iter().all(|d| d.subject != "resourceTypes.Empty"));
        assert!(after.iter().any(|d| d.subject == "predefinedInstances.SYS"));

        p.predefined_instances.pop();
        assert_eq!(validate_platform(&p), []);
    }

    #[test]
    fn diagnostics_are_sorted_by_subject_then_code() {
        let mut p = tiny_platform();
        p.resource_types[0].services.clear();
        p.resource_types[0].roles.clear();
        p.predefined_instances.push(PredefinedInstance {
            name: "A".to_string(),
            type_name: "nosuch".to_string(),
        });
        let diags = validate_platform(&p);
        let keys: Vec<(String, &str)> = diags
            .iter()
            .map(|d| (d.subject.clone(), d.code.as_str()))
            .collect();
        let mut expect = keys.clone();
        expect.sort();
        assert_eq!(keys, expect);
    }
}
