//! Explicit models of execution platforms and a generic engine for
//! retargeting applications between them.
//!
//! A platform model describes what one execution platform (an RTOS, a
//! partitioned avionics kernel, a thread library) offers through its API:
//! resource types with attributes and services, classification tags, and
//! semantic role bindings. An application model instantiates those resource
//! types with slot values and dependencies. Because the semantics live in
//! the platform models and not in the engine, one transformation retargets
//! an application from any modeled platform to any other: resource types
//! are matched by kind and classification signature, role-bound features
//! are woven pairwise, and slot values are converted to the target's data
//! types, with every decision recorded in a report.
//!
//! The crate ships three curated platform models (`osek-mini`,
//! `arinc653-mini`, `posix-mini`), a canonical JSON interchange format, a
//! validator, and a `platform-retarget` command-line tool. See the
//! `examples/` directory for one runnable example per capability.

pub mod builtin;
pub mod cli;
pub mod io;
pub mod model;
pub mod retarget;
pub mod validate;

pub use builtin::{builtin, builtin_names, BuiltinError};
pub use io::{
    parse_application, parse_platform, serialize_application, serialize_platform, ParseCode,
    ParseDiagnostic, Severity,
};
pub use model::{
    classification_signature, role_features, ApplicationModel, AttributeDef, BaseType,
    ClassificationTags, DataTypeDef, Dependency, DottedPath, InstanceSpec, OccurrenceKind,
    PlatformModel, PredefinedInstance, PriorityDirection, PriorityRange, ResourceFamily,
    ResourceKind, ResourceType, Role, ServiceSignature, TagValue, Value,
};
pub use retarget::{
    convert_value, match_types, normalize_priority, retarget, retarget_instance, ConversionError,
    InstanceOutcome, OmitReason, PriorityMode, RetargetError, RetargetPolicy, RetargetReport,
    TypeMapping, UnmatchedReason,
};
pub use validate::{validate_application, validate_platform, ValidationCode, ValidationDiagnostic};
