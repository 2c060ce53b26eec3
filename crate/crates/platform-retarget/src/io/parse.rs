//! Document parsing with path-precise diagnostics.
//!
//! Structural and referential rules are enforced here (shape, closed
//! vocabularies, duplicate names, in-document references). Rule-level
//! checks that have validator codes — a serviceless resource type, an
//! occurrence tag on a non-concurrent kind — are deliberately left to the
//! validator so they can be reported as V-diagnostics rather than parse
//! failures.

use std::collections::BTreeSet;

use serde_json::Value as Json;

use super::{ParseCode, ParseDiagnostic, Severity};
use crate::model::{
    check_value, is_identifier, AppElement, AppObject, ApplicationModel, AttributeDef, BaseType,
    ClassificationTags, DataTypeDef, Dependency, DottedPath, InstanceSpec, OccurrenceKind,
    PlatformModel, PredefinedInstance, PriorityDirection, PriorityRange, ResourceKind,
    ResourceType, Role, RoleCategory, ServiceSignature, TagValue, Value, ValueCheckError,
};

type JMap = serde_json::Map<String, Json>;

struct Diags {
    list: Vec<ParseDiagnostic>,
}

impl Diags {
    fn new() -> Self {
        Diags { list: Vec::new() }
    }

    fn error(&mut self, code: ParseCode, path: impl Into<String>, message: impl Into<String>) {
        self.list.push(ParseDiagnostic {
            severity: Severity::Error,
            path: path.into(),
            code,
            message: message.into(),
        });
    }

    fn has_errors(&self) -> bool {
        !self.list.is_empty()
    }

    fn finish(mut self) -> Vec<ParseDiagnostic> {
        if self.list.is_empty() {
            self.error(ParseCode::Malformed, "/", "document could not be parsed");
        }
        self.list
            .sort_by(|a, b| (&a.path, a.code, &a.message).cmp(&(&b.path, b.code, &b.message)));
        self.list
    }
}

/// Parses a platform document. On success the model satisfies every
/// structural and referential invariant; on failure at least one error
/// diagnostic names the offending node.
pub fn parse_platform(text: &str) -> Result<PlatformModel, Vec<ParseDiagnostic>> {
    let mut d = Diags::new();
    let Some(root) = parse_root(text, "platform", &mut d) else {
        return Err(d.finish());
    };
    check_keys(
        &root,
        &[
            "kind",
            "formatVersion",
            "name",
            "apiLanguage",
            "priorityRange",
            "dataTypes",
            "resourceTypes",
            "predefinedInstances",
        ],
        "",
        &mut d,
    );

    let name = req_ident(&root, "name", "", &mut d).unwrap_or_default();
    let api_language = match root.get("apiLanguage") {
        None => String::new(),
        Some(v) => as_str(v, "/apiLanguage", &mut d).unwrap_or_default().to_string(),
    };
    let priority_range = root
        .get("priorityRange")
        .and_then(|v| parse_priority_range(v, &mut d));

    let data_types = parse_data_types(&root, &mut d);
    let type_names: BTreeSet<&str> = data_types.iter().map(|t| t.name.as_str()).collect();

    let resource_types = parse_resource_types(&root, &type_names, &mut d);
    check_defaults(&data_types, &resource_types, &mut d);
    let rt_names: BTreeSet<&str> = resource_types.iter().map(|t| t.name.as_str()).collect();

    let mut predefined_instances = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, item) in elements(&root, "predefinedInstances", "", &mut d).into_iter().enumerate() {
        let path = format!("/predefinedInstances/{i}");
        let Some(obj) = as_object(item, &path, &mut d) else { continue };
        check_keys(obj, &["name", "type"], &path, &mut d);
        let Some(pi_name) = req_ident(obj, "name", &path, &mut d) else { continue };
        if !seen.insert(pi_name.clone()) {
            d.error(
                ParseCode::DuplicateName,
                format!("{path}/name"),
                format!("predefined instance '{pi_name}' is declared twice"),
            );
        }
        let Some(ty) = req_ident(obj, "type", &path, &mut d) else { continue };
        if !rt_names.contains(ty.as_str()) {
            d.error(
                ParseCode::UnresolvedReference,
                format!("{path}/type"),
                format!("'{ty}' is not a resource type of this platform"),
            );
        }
        predefined_instances.push(PredefinedInstance { name: pi_name, type_name: ty });
    }

    if d.has_errors() {
        return Err(d.finish());
    }
    Ok(PlatformModel {
        name,
        api_language,
        data_types,
        resource_types,
        predefined_instances,
        priority_range,
    })
}

/// Parses an application document. Only intra-document shape is checked;
/// everything that needs the platform (instance types, slot names and
/// values, dependency targets) is the validator's job.
pub fn parse_application(text: &str) -> Result<ApplicationModel, Vec<ParseDiagnostic>> {
    let mut d = Diags::new();
    let Some(root) = parse_root(text, "application", &mut d) else {
        return Err(d.finish());
    };
    check_keys(
        &root,
        &["kind", "formatVersion", "name", "platform", "appElements", "appObjects", "instances"],
        "",
        &mut d,
    );

    let name = req_ident(&root, "name", "", &mut d).unwrap_or_default();
    let platform_name = req_ident(&root, "platform", "", &mut d).unwrap_or_default();

    // One namespace across elements, objects and instances.
    let mut global: BTreeSet<String> = BTreeSet::new();
    let mut claim = |n: &str, path: &str, d: &mut Diags| {
        if !global.insert(n.to_string()) {
            d.error(
                ParseCode::DuplicateName,
                format!("{path}/name"),
                format!("'{n}' is already declared in this application"),
            );
        }
    };

    let mut app_elements = Vec::new();
    for (i, item) in elements(&root, "appElements", "", &mut d).into_iter().enumerate() {
        let path = format!("/appElements/{i}");
        let Some(obj) = as_object(item, &path, &mut d) else { continue };
        check_keys(obj, &["name", "routines"], &path, &mut d);
        let Some(el_name) = req_ident(obj, "name", &path, &mut d) else { continue };
        claim(&el_name, &path, &mut d);
        let mut routines = Vec::new();
        let mut seen = BTreeSet::new();
        for (j, r) in elements(obj, "routines", &path, &mut d).into_iter().enumerate() {
            let rpath = format!("{path}/routines/{j}");
            let Some(routine) = ident_str(r, &rpath, &mut d) else { continue };
            if !seen.insert(routine.clone()) {
                d.error(
                    ParseCode::DuplicateName,
                    rpath,
                    format!("routine '{routine}' is declared twice"),
                );
                continue;
            }
            routines.push(routine);
        }
        app_elements.push(AppElement { name: el_name, routines });
    }
    let element_names: BTreeSet<&str> = app_elements.iter().map(|e| e.name.as_str()).collect();

    let mut app_objects = Vec::new();
    for (i, item) in elements(&root, "appObjects", "", &mut d).into_iter().enumerate() {
        let path = format!("/appObjects/{i}");
        let Some(obj) = as_object(item, &path, &mut d) else { continue };
        check_keys(obj, &["name", "element"], &path, &mut d);
        let Some(obj_name) = req_ident(obj, "name", &path, &mut d) else { continue };
        claim(&obj_name, &path, &mut d);
        let Some(element) = req_ident(obj, "element", &path, &mut d) else { continue };
        if !element_names.contains(element.as_str()) {
            d.error(
                ParseCode::UnresolvedReference,
                format!("{path}/element"),
                format!("'{element}' is not an appElement of this application"),
            );
        }
        app_objects.push(AppObject { name: obj_name, element });
    }

    let mut resource_instances = Vec::new();
    for (i, item) in elements(&root, "instances", "", &mut d).into_iter().enumerate() {
        let path = format!("/instances/{i}");
        let Some(obj) = as_object(item, &path, &mut d) else { continue };
        check_keys(obj, &["name", "type", "slots", "dependencies"], &path, &mut d);
        let Some(inst_name) = req_ident(obj, "name", &path, &mut d) else { continue };
        claim(&inst_name, &path, &mut d);
        let Some(type_name) = req_ident(obj, "type", &path, &mut d) else { continue };

        let mut slots = std::collections::BTreeMap::new();
        if let Some(v) = obj.get("slots") {
            let spath = format!("{path}/slots");
            if let Some(map) = as_object(v, &spath, &mut d) {
                for (attr, raw) in map {
                    let vpath = format!("{spath}/{attr}");
                    if !is_identifier(attr) {
                        d.error(
                            ParseCode::Malformed,
                            vpath,
                            format!("'{attr}' is not a valid attribute name"),
                        );
                        continue;
                    }
                    if let Some(value) = parse_value(raw, &vpath, &mut d) {
                        slots.insert(attr.clone(), value);
                    }
                }
            }
        }

        let mut dependencies = Vec::new();
        for (j, dep) in elements(obj, "dependencies", &path, &mut d).into_iter().enumerate() {
            let dpath = format!("{path}/dependencies/{j}");
            let Some(dobj) = as_object(dep, &dpath, &mut d) else { continue };
            check_keys(dobj, &["role", "target"], &dpath, &mut d);
            let role = req(dobj, "role", &dpath, &mut d)
                .and_then(|v| as_str(v, &format!("{dpath}/role"), &mut d))
                .and_then(|s| match Role::parse(s) {
                    Some(role) => Some(role),
                    None => {
                        d.error(
                            ParseCode::BadEnumLiteral,
                            format!("{dpath}/role"),
                            format!("'{s}' is not a role name"),
                        );
                        None
                    }
                });
            let target = req(dobj, "target", &dpath, &mut d)
                .and_then(|v| as_str(v, &format!("{dpath}/target"), &mut d))
                .and_then(|s| match DottedPath::parse(s) {
                    Some(p) => Some(p),
                    None => {
                        d.error(
                            ParseCode::Malformed,
                            format!("{dpath}/target"),
                            format!("'{s}' is not an 'owner' or 'owner.member' path"),
                        );
                        None
                    }
                });
            if let (Some(role), Some(target)) = (role, target) {
                dependencies.push(Dependency { role, target });
            }
        }

        resource_instances.push(InstanceSpec {
            name: inst_name,
            type_name,
            slots,
            dependencies,
        });
    }

    if d.has_errors() {
        return Err(d.finish());
    }
    Ok(ApplicationModel {
        name,
        platform_name,
        app_elements,
        app_objects,
        resource_instances,
    })
}

fn parse_root(text: &str, expected_kind: &str, d: &mut Diags) -> Option<JMap> {
    let json: Json = match serde_json::from_str(text) {
        Ok(j) => j,
        Err(e) => {
            d.error(ParseCode::Malformed, "/", format!("not well-formed JSON: {e}"));
            return None;
        }
    };
    let Json::Object(root) = json else {
        d.error(ParseCode::Malformed, "/", "document root must be an object");
        return None;
    };
    match root.get("kind").and_then(Json::as_str) {
        Some(kind) if kind == expected_kind => {}
        Some(kind) => {
            d.error(
                ParseCode::Malformed,
                "/kind",
                format!("expected kind \"{expected_kind}\", found \"{kind}\""),
            );
            return None;
        }
        None => {
            d.error(
                ParseCode::Malformed,
                "/",
                format!("missing document discriminator: \"kind\": \"{expected_kind}\""),
            );
            return None;
        }
    }
    if let Some(v) = root.get("formatVersion") {
        if v.as_u64() != Some(1) {
            d.error(ParseCode::Malformed, "/formatVersion", "only format version 1 is supported");
        }
    }
    Some(root)
}

fn parse_priority_range(v: &Json, d: &mut Diags) -> Option<PriorityRange> {
    let path = "/priorityRange";
    let obj = as_object(v, path, d)?;
    check_keys(obj, &["low", "high", "direction"], path, d);
    let low = req(obj, "low", path, d).and_then(|v| match v.as_i64() {
        Some(n) => Some(n),
        None => {
            d.error(ParseCode::Malformed, format!("{path}/low"), "expected an integer");
            None
        }
    });
    let high = req(obj, "high", path, d).and_then(|v| match v.as_i64() {
        Some(n) => Some(n),
        None => {
            d.error(ParseCode::Malformed, format!("{path}/high"), "expected an integer");
            None
        }
    });
    let direction = req(obj, "direction", path, d)
        .and_then(|v| as_str(v, &format!("{path}/direction"), d))
        .and_then(|s| match PriorityDirection::parse(s) {
            Some(dir) => Some(dir),
            None => {
                d.error(
                    ParseCode::BadEnumLiteral,
                    format!("{path}/direction"),
                    format!("'{s}' is not \"ascending\" or \"descending\""),
                );
                None
            }
        });
    let (low, high, direction) = (low?, high?, direction?);
    if low >= high {
        d.error(
            ParseCode::Malformed,
            path,
            "priorityRange.low must be numerically less than priorityRange.high; \
             urgency order is carried by the direction flag",
        );
        return None;
    }
    Some(PriorityRange { low, high, direction })
}

fn parse_data_types(root: &JMap, d: &mut Diags) -> Vec<DataTypeDef> {
    let mut out: Vec<DataTypeDef> = Vec::new();
    for (i, item) in elements(root, "dataTypes", "", d).into_iter().enumerate() {
        let path = format!("/dataTypes/{i}");
        let Some(obj) = as_object(item, &path, d) else { continue };
        check_keys(obj, &["name", "base", "bits", "enumLiterals", "range"], &path, d);
        let Some(name) = req_ident(obj, "name", &path, d) else { continue };
        if out.iter().any(|t| t.name == name) {
            d.error(
                ParseCode::DuplicateName,
                format!("{path}/name"),
                format!("data type '{name}' is declared twice"),
            );
        }
        let Some(base) = req(obj, "base", &path, d)
            .and_then(|v| as_str(v, &format!("{path}/base"), d))
            .and_then(|s| match BaseType::parse(s) {
                Some(b) => Some(b),
                None => {
                    d.error(
                        ParseCode::BadEnumLiteral,
                        format!("{path}/base"),
                        format!("'{s}' is not a base type"),
                    );
                    None
                }
            })
        else {
            continue;
        };

        let bits = obj.get("bits").and_then(|v| {
            let bpath = format!("{path}/bits");
            if !base.is_numeric() {
                d.error(ParseCode::Malformed, bpath, "bits is only allowed on numeric bases");
                return None;
            }
            match v.as_u64() {
                Some(b) if base == BaseType::Float && (b == 32 || b == 64) => Some(b as u32),
                Some(b) if base != BaseType::Float && (1..=64).contains(&b) => Some(b as u32),
                Some(b) => {
                    let allowed = if base == BaseType::Float { "32 or 64" } else { "1..=64" };
                    d.error(ParseCode::Malformed, bpath, format!("bits {b} not in {allowed}"));
                    None
                }
                None => {
                    d.error(ParseCode::Malformed, bpath, "expected a positive integer");
                    None
                }
            }
        });

        let mut enum_literals = Vec::new();
        match (base, obj.get("enumLiterals")) {
            (BaseType::Enum, None) => {
                d.error(ParseCode::Malformed, &path, "enum type requires enumLiterals");
            }
            (BaseType::Enum, Some(v)) => {
                let lpath = format!("{path}/enumLiterals");
                if let Some(items) = as_array(v, &lpath, d) {
                    if items.is_empty() {
                        d.error(ParseCode::Malformed, &lpath, "enumLiterals must be non-empty");
                    }
                    for (j, lit) in items.iter().enumerate() {
                        let Some(lit) = ident_str(lit, &format!("{lpath}/{j}"), d) else { continue };
                        if enum_literals.contains(&lit) {
                            d.error(
                                ParseCode::DuplicateName,
                                format!("{lpath}/{j}"),
                                format!("enum literal '{lit}' is declared twice"),
                            );
                            continue;
                        }
                        enum_literals.push(lit);
                    }
                }
            }
            (_, Some(_)) => {
                d.error(
                    ParseCode::Malformed,
                    format!("{path}/enumLiterals"),
                    "enumLiterals is only allowed on enum types",
                );
            }
            (_, None) => {}
        }

        let range = obj.get("range").and_then(|v| {
            let rpath = format!("{path}/range");
            if !base.is_numeric() {
                d.error(ParseCode::Malformed, rpath, "range is only allowed on numeric bases");
                return None;
            }
            let items = as_array(v, &rpath, d)?;
            let bounds: Vec<f64> = items.iter().filter_map(Json::as_f64).collect();
            if items.len() != 2 || bounds.len() != 2 {
                d.error(ParseCode::Malformed, rpath, "range must be a [min, max] number pair");
                return None;
            }
            if bounds[0] > bounds[1] {
                d.error(ParseCode::Malformed, rpath, "range min must not exceed range max");
                return None;
            }
            Some((bounds[0], bounds[1]))
        });

        out.push(DataTypeDef { name, base, bits, enum_literals, range });
    }
    out
}

fn parse_resource_types(
    root: &JMap,
    data_types: &BTreeSet<&str>,
    d: &mut Diags,
) -> Vec<ResourceType> {
    let mut out: Vec<ResourceType> = Vec::new();
    for (i, item) in elements(root, "resourceTypes", "", d).into_iter().enumerate() {
        let path = format!("/resourceTypes/{i}");
        let Some(obj) = as_object(item, &path, d) else { continue };
        check_keys(obj, &["name", "kind", "tags", "attributes", "services", "roles"], &path, d);
        let Some(name) = req_ident(obj, "name", &path, d) else { continue };
        if out.iter().any(|t| t.name == name) {
            d.error(
                ParseCode::DuplicateName,
                format!("{path}/name"),
                format!("resource type '{name}' is declared twice"),
            );
        }
        let Some(kind) = req(obj, "kind", &path, d)
            .and_then(|v| as_str(v, &format!("{path}/kind"), d))
            .and_then(|s| match ResourceKind::parse(s) {
                Some(k) => Some(k),
                None => {
                    d.error(
                        ParseCode::BadEnumLiteral,
                        format!("{path}/kind"),
                        format!("'{s}' is not a resource kind"),
                    );
                    None
                }
            })
        else {
            continue;
        };

        let tags = parse_tags(obj, &path, d);
        let (attributes, services) = parse_features(obj, &path, data_types, d);
        let roles = parse_roles(obj, &path, &name, &attributes, &services, d);

        out.push(ResourceType { name, kind, tags, attributes, services, roles });
    }
    out
}

fn parse_tags(obj: &JMap, path: &str, d: &mut Diags) -> ClassificationTags {
    let mut tags = ClassificationTags::default();
    let Some(v) = obj.get("tags") else { return tags };
    let tpath = format!("{path}/tags");
    let Some(map) = as_object(v, &tpath, d) else { return tags };
    for (key, value) in map {
        let kpath = format!("{tpath}/{key}");
        match key.as_str() {
            "occurrenceKind" => {
                if let Some(s) = as_str(value, &kpath, d) {
                    match OccurrenceKind::parse(s) {
                        Some(k) => tags.occurrence_kind = Some(k),
                        None => d.error(
                            ParseCode::BadEnumLiteral,
                            kpath,
                            format!("'{s}' is not periodic, aperiodic or sporadic"),
                        ),
                    }
                }
            }
            "isPreemptable" => match value.as_bool() {
                Some(b) => tags.is_preemptable = Some(b),
                None => d.error(ParseCode::Malformed, kpath, "expected a boolean"),
            },
            k if k.starts_with("x-") && is_identifier(k) => match value {
                Json::Bool(b) => {
                    tags.extra.insert(k.to_string(), TagValue::Bool(*b));
                }
                Json::String(s) if is_identifier(s) => {
                    tags.extra.insert(k.to_string(), TagValue::Literal(s.clone()));
                }
                Json::String(s) => d.error(
                    ParseCode::BadEnumLiteral,
                    kpath,
                    format!("'{s}' is not a valid enum literal"),
                ),
                _ => d.error(ParseCode::Malformed, kpath, "tag value must be a boolean or an enum literal"),
            },
            _ => d.error(
                ParseCode::UnknownKey,
                kpath,
                format!("'{key}' is not a classification tag (extension tags start with \"x-\")"),
            ),
        }
    }
    tags
}

fn parse_features(
    obj: &JMap,
    path: &str,
    data_types: &BTreeSet<&str>,
    d: &mut Diags,
) -> (Vec<AttributeDef>, Vec<ServiceSignature>) {
    let mut feature_names: BTreeSet<String> = BTreeSet::new();
    let mut claim = |n: &str, at: String, d: &mut Diags| {
        if !feature_names.insert(n.to_string()) {
            d.error(
                ParseCode::DuplicateName,
                at,
                format!("feature name '{n}' is declared twice in this resource type"),
            );
        }
    };

    let mut attributes = Vec::new();
    for (j, item) in elements(obj, "attributes", path, d).into_iter().enumerate() {
        let apath = format!("{path}/attributes/{j}");
        let Some(attr) = as_object(item, &apath, d) else { continue };
        check_keys(attr, &["name", "type", "default"], &apath, d);
        let Some(name) = req_ident(attr, "name", &apath, d) else { continue };
        claim(&name, format!("{apath}/name"), d);
        let Some(type_name) = req(attr, "type", &apath, d)
            .and_then(|v| as_str(v, &format!("{apath}/type"), d).map(str::to_string))
        else {
            continue;
        };
        if !data_types.contains(type_name.as_str()) {
            d.error(
                ParseCode::UnresolvedReference,
                format!("{apath}/type"),
                format!("'{type_name}' is not a data type of this platform"),
            );
        }
        let default = attr
            .get("default")
            .and_then(|v| parse_value(v, &format!("{apath}/default"), d));
        attributes.push(AttributeDef { name, type_name, default });
    }

    let mut services = Vec::new();
    for (j, item) in elements(obj, "services", path, d).into_iter().enumerate() {
        let spath = format!("{path}/services/{j}");
        let Some(svc) = as_object(item, &spath, d) else { continue };
        check_keys(svc, &["name", "params", "returns"], &spath, d);
        let Some(name) = req_ident(svc, "name", &spath, d) else { continue };
        claim(&name, format!("{spath}/name"), d);
        let mut params = Vec::new();
        for (k, p) in elements(svc, "params", &spath, d).into_iter().enumerate() {
            let ppath = format!("{spath}/params/{k}");
            let Some(pobj) = as_object(p, &ppath, d) else { continue };
            check_keys(pobj, &["name", "type"], &ppath, d);
            let Some(pname) = req_ident(pobj, "name", &ppath, d) else { continue };
            if params.iter().any(|(n, _)| *n == pname) {
                d.error(
                    ParseCode::DuplicateName,
                    format!("{ppath}/name"),
                    format!("parameter '{pname}' is declared twice"),
                );
                continue;
            }
            let Some(ptype) = req(pobj, "type", &ppath, d)
                .and_then(|v| as_str(v, &format!("{ppath}/type"), d).map(str::to_string))
            else {
                continue;
            };
            if !data_types.contains(ptype.as_str()) {
                d.error(
                    ParseCode::UnresolvedReference,
                    format!("{ppath}/type"),
                    format!("'{ptype}' is not a data type of this platform"),
                );
            }
            params.push((pname, ptype));
        }
        let returns = svc.get("returns").and_then(|v| {
            let rpath = format!("{spath}/returns");
            let s = as_str(v, &rpath, d)?.to_string();
            if !data_types.contains(s.as_str()) {
                d.error(
                    ParseCode::UnresolvedReference,
                    rpath,
                    format!("'{s}' is not a data type of this platform"),
                );
            }
            Some(s)
        });
        services.push(ServiceSignature { name, params, returns });
    }

    (attributes, services)
}

fn parse_roles(
    obj: &JMap,
    path: &str,
    type_name: &str,
    attributes: &[AttributeDef],
    services: &[ServiceSignature],
    d: &mut Diags,
) -> std::collections::BTreeMap<Role, Vec<String>> {
    let mut roles = std::collections::BTreeMap::new();
    let Some(v) = obj.get("roles") else { return roles };
    let rpath = format!("{path}/roles");
    let Some(map) = as_object(v, &rpath, d) else { return roles };
    for (key, value) in map {
        let kpath = format!("{rpath}/{key}");
        let Some(role) = Role::parse(key) else {
            d.error(
                ParseCode::UnknownKey,
                kpath,
                format!("'{key}' is not a role name (extension roles start with \"x-\")"),
            );
            continue;
        };
        let Some(items) = as_array(value, &kpath, d) else { continue };
        let mut features = Vec::new();
        for (j, f) in items.iter().enumerate() {
            let fpath = format!("{kpath}/{j}");
            let Some(feature) = as_str(f, &fpath, d) else { continue };
            let is_attr = attributes.iter().any(|a| a.name == feature);
            let is_svc = services.iter().any(|s| s.name == feature);
            let ok = match role.category() {
                RoleCategory::Attribute => is_attr,
                RoleCategory::Service => is_svc,
                RoleCategory::Dependency | RoleCategory::Extension => is_attr || is_svc,
            };
            if !ok {
                let expected = match role.category() {
                    RoleCategory::Attribute => "an attribute",
                    RoleCategory::Service => "a service",
                    _ => "a feature",
                };
                d.error(
                    ParseCode::UnresolvedReference,
                    fpath,
                    format!("'{feature}' is not {expected} of resource type '{type_name}'"),
                );
                continue;
            }
            features.push(feature.to_string());
        }
        roles.insert(role, features);
    }
    roles
}

/// Second pass over attribute defaults once all data types are parsed.
fn check_defaults(data_types: &[DataTypeDef], resource_types: &[ResourceType], d: &mut Diags) {
    for (i, rt) in resource_types.iter().enumerate() {
        for (j, attr) in rt.attributes.iter().enumerate() {
            let dt = data_types.iter().find(|t| t.name == attr.type_name);
            let (Some(default), Some(dt)) = (&attr.default, dt) else { continue };
            if let Err(err) = check_value(default, dt) {
                let path = format!("/resourceTypes/{i}/attributes/{j}/default");
                let code = match err {
                    ValueCheckError::UnknownLiteral { .. } => ParseCode::BadEnumLiteral,
                    _ => ParseCode::Malformed,
                };
                d.error(code, path, format!("default value: {err}"));
            }
        }
    }
}

fn parse_value(v: &Json, path: &str, d: &mut Diags) -> Option<Value> {
    let Some(obj) = v.as_object() else {
        d.error(
            ParseCode::Malformed,
            path,
            "expected a tagged value object such as {\"int\": 10}",
        );
        return None;
    };
    if obj.len() != 1 {
        d.error(ParseCode::Malformed, path, "a value object carries exactly one tag");
        return None;
    }
    let (tag, inner) = obj.iter().next().unwrap();
    match tag.as_str() {
        "int" => match inner.as_i64() {
            Some(i) => Some(Value::Int(i)),
            None => {
                d.error(ParseCode::Malformed, format!("{path}/int"), "expected a 64-bit integer");
                None
            }
        },
        "uint" => match inner.as_u64() {
            Some(u) => Some(Value::Uint(u)),
            None => {
                d.error(
                    ParseCode::Malformed,
                    format!("{path}/uint"),
                    "expected a non-negative 64-bit integer",
                );
                None
            }
        },
        "float" => match inner.as_f64() {
            Some(x) => Some(Value::Float(x)),
            None => {
                d.error(ParseCode::Malformed, format!("{path}/float"), "expected a number");
                None
            }
        },
        "bool" => match inner.as_bool() {
            Some(b) => Some(Value::Bool(b)),
            None => {
                d.error(ParseCode::Malformed, format!("{path}/bool"), "expected a boolean");
                None
            }
        },
        "string" => match inner.as_str() {
            Some(s) => Some(Value::Str(s.to_string())),
            None => {
                d.error(ParseCode::Malformed, format!("{path}/string"), "expected a string");
                None
            }
        },
        "enum" => match inner.as_str() {
            Some(s) if is_identifier(s) => Some(Value::EnumLit(s.to_string())),
            Some(s) => {
                d.error(
                    ParseCode::BadEnumLiteral,
                    format!("{path}/enum"),
                    format!("'{s}' is not a valid enum literal"),
                );
                None
            }
            None => {
                d.error(ParseCode::Malformed, format!("{path}/enum"), "expected a string");
                None
            }
        },
        other => {
            d.error(
                ParseCode::UnknownKey,
                format!("{path}/{other}"),
                format!("'{other}' is not a value tag (int, uint, float, bool, string, enum)"),
            );
            None
        }
    }
}

// ---- low-level helpers ----

fn as_object<'a>(v: &'a Json, path: &str, d: &mut Diags) -> Option<&'a JMap> {
    match v.as_object() {
        Some(o) => Some(o),
        None => {
            d.error(ParseCode::Malformed, path, "expected an object");
            None
        }
    }
}

fn as_array<'a>(v: &'a Json, path: &str, d: &mut Diags) -> Option<&'a Vec<Json>> {
    match v.as_array() {
        Some(a) => Some(a),
        None => {
            d.error(ParseCode::Malformed, path, "expected an array");
            None
        }
    }
}

fn as_str<'a>(v: &'a Json, path: &str, d: &mut Diags) -> Option<&'a str> {
    match v.as_str() {
        Some(s) => Some(s),
        None => {
            d.error(ParseCode::Malformed, path, "expected a string");
            None
        }
    }
}

fn req<'a>(map: &'a JMap, key: &str, path: &str, d: &mut Diags) -> Option<&'a Json> {
    match map.get(key) {
        Some(v) => Some(v),
        None => {
            let at = if path.is_empty() { "/" } else { path };
            d.error(ParseCode::Malformed, at, format!("missing required key '{key}'"));
            None
        }
    }
}

fn ident_str(v: &Json, path: &str, d: &mut Diags) -> Option<String> {
    let s = as_str(v, path, d)?;
    if is_identifier(s) {
        Some(s.to_string())
    } else {
        d.error(ParseCode::Malformed, path, format!("'{s}' is not a valid identifier"));
        None
    }
}

fn req_ident(map: &JMap, key: &str, path: &str, d: &mut Diags) -> Option<String> {
    let v = req(map, key, path, d)?;
    ident_str(v, &format!("{path}/{key}"), d)
}

fn check_keys(map: &JMap, allowed: &[&str], path: &str, d: &mut Diags) {
    for key in map.keys() {
        if !allowed.contains(&key.as_str()) {
            d.error(
                ParseCode::UnknownKey,
                format!("{path}/{key}"),
                format!("'{key}' is not a key of this schema"),
            );
        }
    }
}

/// Members of an optional array member; absent means empty.
fn elements<'a>(map: &'a JMap, key: &str, path: &str, d: &mut Diags) -> Vec<&'a Json> {
    match map.get(key) {
        None => Vec::new(),
        Some(v) => as_array(v, &format!("{path}/{key}"), d)
            .map(|a| a.iter().collect())
            .unwrap_or_default(),
    }
}

