//! A system together with its named parts and constraints: the unit that
//! queries and the law suite run against.

use std::sync::Arc;

use indexmap::IndexMap;

use crate::behavior::BehaviorType;
use crate::constraint::Constraint;
use crate::error::Error;
use crate::part::Part;

#[derive(Debug, Clone)]
pub struct SystemModel {
    pub name: String,
    pub system: Arc<BehaviorType>,
    pub parts: IndexMap<String, Part>,
    pub constraints: IndexMap<String, Constraint>,
}

impl SystemModel {
    pub fn new(name: impl Into<String>, system: Arc<BehaviorType>) -> SystemModel {
        SystemModel {
            name: name.into(),
            system,
            parts: IndexMap::new(),
            constraints: IndexMap::new(),
        }
    }

    pub fn add_part(&mut self, name: impl Into<String>, part: Part) -> Result<(), Error> {
        if !(Arc::ptr_eq(part.system(), &self.system) || part.system() == &self.system) {
            return Err(Error::SystemMismatch {
                left: self.system.id().to_string(),
                right: part.system().id().to_string(),
            });
        }
        self.parts.insert(name.into(), part);
        Ok(())
    }

    pub fn part(&self, name: &str) -> Option<&Part> {
        self.parts.get(name)
    }
}
