//! Canonical serialization of models to interchange documents.

use serde_json::{Map, Number, Value as Json};

use crate::model::{
    ApplicationModel, AttributeDef, DataTypeDef, InstanceSpec, PlatformModel, ResourceType,
    ServiceSignature, Value,
};

/// Renders a platform model as a canonical document. The result ends with a
/// single LF and parses back to a structurally equal model.
pub fn serialize_platform(p: &PlatformModel) -> String {
    let mut root = Map::new();
    root.insert("kind".into(), Json::from("platform"));
    root.insert("name".into(), Json::from(p.name.as_str()));
    root.insert("apiLanguage".into(), Json::from(p.api_language.as_str()));
    if let Some(range) = &p.priority_range {
        let mut m = Map::new();
        m.insert("low".into(), Json::from(range.low));
        m.insert("high".into(), Json::from(range.high));
        m.insert("direction".into(), Json::from(range.direction.as_str()));
        root.insert("priorityRange".into(), Json::Object(m));
    }
    root.insert(
        "dataTypes".into(),
        Json::Array(p.data_types.iter().map(data_type_to_json).collect()),
    );
    root.insert(
        "resourceTypes".into(),
        Json::Array(p.resource_types.iter().map(resource_type_to_json).collect()),
    );
    root.insert(
        "predefinedInstances".into(),
        Json::Array(
            p.predefined_instances
                .iter()
                .map(|pi| {
                    let mut m = Map::new();
                    m.insert("name".into(), Json::from(pi.name.as_str()));
                    m.insert("type".into(), Json::from(pi.type_name.as_str()));
                    Json::Object(m)
                })
                .collect(),
        ),
    );
    render(Json::Object(root))
}

/// Renders an application model as a canonical document.
pub fn serialize_application(a: &ApplicationModel) -> String {
    let mut root = Map::new();
    root.insert("kind".into(), Json::from("application"));
    root.insert("name".into(), Json::from(a.name.as_str()));
    root.insert("platform".into(), Json::from(a.platform_name.as_str()));
    root.insert(
        "appElements".into(),
        Json::Array(
            a.app_elements
                .iter()
                .map(|e| {
                    let mut m = Map::new();
                    m.insert("name".into(), Json::from(e.name.as_str()));
                    m.insert(
                        "routines".into(),
                        Json::Array(e.routines.iter().map(|r| Json::from(r.as_str())).collect()),
                    );
                    Json::Object(m)
                })
                .collect(),
        ),
    );
    root.insert(
        "appObjects".into(),
        Json::Array(
            a.app_objects
                .iter()
                .map(|o| {
                    let mut m = Map::new();
                    m.insert("name".into(), Json::from(o.name.as_str()));
                    m.insert("element".into(), Json::from(o.element.as_str()));
                    Json::Object(m)
                })
                .collect(),
        ),
    );
    root.insert(
        "instances".into(),
        Json::Array(a.resource_instances.iter().map(instance_to_json).collect()),
    );
    render(Json::Object(root))
}

fn data_type_to_json(dt: &DataTypeDef) -> Json {
    let mut m = Map::new();
    m.insert("name".into(), Json::from(dt.name.as_str()));
    m.insert("base".into(), Json::from(dt.base.as_str()));
    if let Some(bits) = dt.bits {
        m.insert("bits".into(), Json::from(bits));
    }
    if !dt.enum_literals.is_empty() {
        m.insert(
            "enumLiterals".into(),
            Json::Array(dt.enum_literals.iter().map(|l| Json::from(l.as_str())).collect()),
        );
    }
    if let Some((min, max)) = dt.range {
        m.insert("range".into(), Json::Array(vec![number(min), number(max)]));
    }
    Json::Object(m)
}

fn resource_type_to_json(rt: &ResourceType) -> Json {
    let mut m = Map::new();
    m.insert("name".into(), Json::from(rt.name.as_str()));
    m.insert("kind".into(), Json::from(rt.kind.as_str()));

    let mut tags = Map::new();
    if let Some(kind) = rt.tags.occurrence_kind {
        tags.insert("occurrenceKind".into(), Json::from(kind.as_str()));
    }
    if let Some(p) = rt.tags.is_preemptable {
        tags.insert("isPreemptable".into(), Json::from(p));
    }
    for (key, value) in &rt.tags.extra {
        let v = match value {
            crate::model::TagValue::Bool(b) => Json::from(*b),
            crate::model::TagValue::Literal(l) => Json::from(l.as_str()),
        };
        tags.insert(key.clone(), v);
    }
    m.insert("tags".into(), Json::Object(tags));

    m.insert(
        "attributes".into(),
        Json::Array(rt.attributes.iter().map(attribute_to_json).collect()),
    );
    m.insert(
        "services".into(),
        Json::Array(rt.services.iter().map(service_to_json).collect()),
    );

    let mut roles = Map::new();
    for (role, features) in &rt.roles {
        roles.insert(
            role.as_str().to_string(),
            Json::Array(features.iter().map(|f| Json::from(f.as_str())).collect()),
        );
    }
    m.insert("roles".into(), Json::Object(roles));
    Json::Object(m)
}

fn attribute_to_json(attr: &AttributeDef) -> Json {
    let mut m = Map::new();
    m.insert("name".into(), Json::from(attr.name.as_str()));
    m.insert("type".into(), Json::from(attr.type_name.as_str()));
    if let Some(default) = &attr.default {
        m.insert("default".into(), value_to_json(default));
    }
    Json::Object(m)
}

fn service_to_json(svc: &ServiceSignature) -> Json {
    let mut m = Map::new();
    m.insert("name".into(), Json::from(svc.name.as_str()));
    m.insert(
        "params".into(),
        Json::Array(
            svc.params
                .iter()
                .map(|(name, ty)| {
                    let mut p = Map::new();
                    p.insert("name".into(), Json::from(name.as_str()));
                    p.insert("type".into(), Json::from(ty.as_str()));
                    Json::Object(p)
                })
                .collect(),
        ),
    );
    if let Some(ret) = &svc.returns {
        m.insert("returns".into(), Json::from(ret.as_str()));
    }
    Json::Object(m)
}

fn instance_to_json(inst: &InstanceSpec) -> Json {
    let mut m = Map::new();
    m.insert("name".into(), Json::from(inst.name.as_str()));
    m.insert("type".into(), Json::from(inst.type_name.as_str()));
    let mut slots = Map::new();
    for (attr, value) in &inst.slots {
        slots.insert(attr.clone(), value_to_json(value));
    }
    m.insert("slots".into(), Json::Object(slots));
    m.insert(
        "dependencies".into(),
        Json::Array(
            inst.dependencies
                .iter()
                .map(|dep| {
                    let mut d = Map::new();
                    d.insert("role".into(), Json::from(dep.role.as_str()));
                    d.insert("target".into(), Json::from(dep.target.to_string().as_str()));
                    Json::Object(d)
                })
                .collect(),
        ),
    );
    Json::Object(m)
}

/// Tagged single-key encoding of a value: `{"int": 10}`, `{"enum": "FIFO"}`,
/// ... The tag keeps int/uint/string/enum values distinguishable across
/// round trips.
pub(crate) fn value_to_json(v: &Value) -> Json {
    let mut m = Map::new();
    match v {
        Value::Int(i) => m.insert("int".into(), Json::from(*i)),
        Value::Uint(u) => m.insert("uint".into(), Json::from(*u)),
        Value::Float(x) => m.insert("float".into(), number(*x)),
        Value::Bool(b) => m.insert("bool".into(), Json::from(*b)),
        Value::Str(s) => m.insert("string".into(), Json::from(s.as_str())),
        Value::EnumLit(l) => m.insert("enum".into(), Json::from(l.as_str())),
    };
    Json::Object(m)
}

fn number(x: f64) -> Json {
    // Valid models never hold non-finite floats; JSON cannot encode them.
    Json::Number(Number::from_f64(x).expect("finite float in model"))
}

fn render(root: Json) -> String {
    let mut text = serde_json::to_string_pretty(&root).expect("model serializes to JSON");
    text.push('\n');
    text
}
