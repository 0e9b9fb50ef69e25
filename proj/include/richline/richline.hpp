#pragma once

// Exact Szemeredi-Trotter grid constructions over number fields: nice-basis
// arithmetic, coefficient boxes, the unbalanced line family, and exact
// richness verification with an independent pair-enumeration oracle.

#include <richline/basis_spec.hpp>
#include <richline/construction.hpp>
#include <richline/export.hpp>
#include <richline/gap.hpp>
#include <richline/incidence.hpp>
#include <richline/numberfield.hpp>
#include <richline/report_json.hpp>
#include <richline/sampling.hpp>
