#pragma once

#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "versorlab/induction.hpp"
#include "versorlab/mckay.hpp"
#include "versorlab/versor_group.hpp"
#include "versorlab/cga2d.hpp"

namespace versorlab::cli {

std::string render_roots(const RootSystem& rs, Format format);
std::string render_group(const VersorGroup& g, Format format);
std::string render_group(const QuotientGroup& q, Format format);
std::string render_classes(const VersorGroup& g, Format format);
std::string render_classes(const QuotientGroup& q, Format format);
std::string render_induction(const InducedRootSystem4D& induced,
                             const SymmetryReport& symmetries, Format format);
std::string render_mckay(const std::vector<McKayRow>& rows, Format format);
std::string render_modular(const cga::ModularComparison& cmp, Format format);
std::string render_checks(const std::vector<CheckResult>& checks, Format format);

}  // namespace versorlab::cli
