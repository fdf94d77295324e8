#pragma once

#include <string>

#include <json.hpp>

#include "combinach/family.hpp"
#include "combinach/norms.hpp"
#include "combinach/setgen.hpp"
#include "combinach/weights.hpp"

namespace combinach {

using Json = nlohmann::ordered_json;

// Strictly validated deserializers for the CLI vocabularies; unknown fields
// are rejected.
Family parse_family(const Json& j);
SetGenerator parse_generator(const Json& j);
WeightSeq parse_weights(const Json& j);
FinVec parse_vector(const Json& j);
FiniteSet parse_set(const Json& j);
BlockRule parse_block_rule(const Json& j);

// Executes a validated job object {"subcommand": ..., ...} and returns its
// deterministic output.  Throws validation_error / precondition_error /
// verification_error; the CLI maps these to exit codes 2 / 3 / 4.
std::string run_job(const Json& job);

std::string run_job_text(const std::string& job_json);

}  // namespace combinach
