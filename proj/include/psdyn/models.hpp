#pragma once

#include <memory>
#include <string>

#include "psdyn/system.hpp"

namespace psdyn {

enum class ModelId {
    covid_p2,   // epidemic model, p multiplies x2
    covid_p1,   // epidemic model, p multiplies x1 (negated coupling)
    lorenz_rho, // Lorenz system with p = rho
};

/// Built-in model registry. Definitions are immutable after startup; the
/// returned pointer can be shared freely across threads.
std::shared_ptr<const SystemDef> get_model(ModelId id);

/// Name-based lookup ("covid_p2", "covid_p1", "lorenz_rho"); throws
/// std::invalid_argument for unknown names.
std::shared_ptr<const SystemDef> get_model(const std::string& name);

/// Build a SystemDef from the declarative JSON form: dimension, polynomial
/// terms of g as coefficient/exponent tuples, dense B, and defaults. Lets
/// user-defined systems of the g(x) + p*B*x class run without recompilation.
std::shared_ptr<const SystemDef> model_from_json_text(const std::string& text);
std::shared_ptr<const SystemDef> load_model_file(const std::string& path);

} // namespace psdyn
