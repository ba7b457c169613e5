#ifndef EXTVAN_CONFIG_HPP
#define EXTVAN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extvan/fields.hpp"
#include "extvan/resolution.hpp"

namespace extvan {

inline constexpr std::uint64_t kDefaultSeed = 0x65787476616e31ULL;

struct AlgebraConfig {
    enum class Kind {
        TruncatedPolynomial,
        QuantumCI,
        Exterior,
        KleinFour,
        Cyclic,
        Symmetric,
        GroupTableFile,
        StructureConstantsFile,
    };
    Kind kind = Kind::TruncatedPolynomial;
    std::size_t c = 1;
    std::size_t a = 2;
    std::string q = "1";
    std::size_t group_order = 2;  // cyclic/symmetric parameter
    std::string path;             // table or structure-constant file
};

struct ModuleConfig {
    StandardModuleKind kind = StandardModuleKind::Trivial;
    std::size_t syzygy_index = 1;
};

struct ActingRingConfig {
    enum class Choice { ExtGenerators, DegreeTwoOperators, Explicit };
    Choice choice = Choice::ExtGenerators;
    std::size_t max_degree = 6;  // generator search bound
    std::vector<int> degrees;    // explicit choice
};

struct RunConfig {
    FieldSpec field = FieldSpec::prime(2);
    std::optional<AlgebraConfig> algebra;
    std::optional<std::string> dims_csv;  // analyze a raw dimension window instead
    ModuleConfig module_m, module_n;
    std::size_t n_max = 40;
    ActingRingConfig acting;
    int guard = 8;
    std::uint64_t seed = kDefaultSeed;
    int trials = 64;
    std::optional<std::int64_t> holdout_from;
    ResolutionLimits limits;
};

// Throws Error(ConfigError) naming the offending key.
RunConfig parse_run_config(const std::string& path);

std::vector<std::vector<std::size_t>> parse_group_table_csv(const std::string& path);
std::vector<std::int64_t> parse_dims_csv(const std::string& path);

}  // namespace extvan

#endif
