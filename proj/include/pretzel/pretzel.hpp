#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace pretzel {

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class StripClass { Parallel, Antiparallel };

// Strips of a standard pretzel diagram, left to right. Each entry is the
// number of crossings in the strip signed by the crossing sign. A hint of 'p'
// or 'a' pins the orientation class of that strip; 0 leaves it free.
struct RawPretzel {
    std::vector<int> strips;
    std::vector<char> hints;

    bool empty() const { return strips.empty(); }
    char hint(std::size_t i) const { return i < hints.size() ? hints[i] : 0; }
    std::string to_string() const;
};

// "2,-3,4" or "2p,-4p,4a"
RawPretzel parse_strips(std::string_view text);

struct Type3Grouping {
    std::vector<int> mu;     // parallel, positive crossings
    std::vector<int> nu;     // parallel, negative crossings
    std::vector<int> alpha;  // antiparallel strips of 2*alpha positive crossings
    std::vector<int> beta;   // antiparallel strips of 2*beta negative crossings

    // sorts every list descending and checks the invariants
    static Type3Grouping make(std::vector<int> mu, std::vector<int> nu,
                              std::vector<int> alpha, std::vector<int> beta);

    int rho_plus() const { return static_cast<int>(mu.size()); }
    int rho_minus() const { return static_cast<int>(nu.size()); }
    int kappa_plus() const { return static_cast<int>(alpha.size()); }
    int kappa_minus() const { return static_cast<int>(beta.size()); }
    int delta_plus() const;
    int delta_minus() const;
    int n() const { return (rho_plus() + rho_minus()) / 2; }
    int sum_mu() const;
    int sum_nu() const;
    int sum_alpha() const;
    int sum_beta() const;
    int crossings() const { return sum_mu() + sum_nu() + 2 * sum_alpha() + 2 * sum_beta(); }

    bool is_standard() const { return delta_plus() == 0 || delta_minus() == 0; }
    // throws InvalidInput
    void validate() const;

    // P3(2;-3|4;0): the signed crossing counts of each part, 0 for an empty part
    std::string key() const;
    // mu=2;nu=3;alpha=2;beta=
    std::string group_text() const;
    nlohmann::json to_json() const;

    // parallel strips signed by crossing sign, then antiparallel ones
    std::vector<int> parallel_strips() const;
    std::vector<int> antiparallel_strips() const;

    friend auto operator<=>(const Type3Grouping&, const Type3Grouping&) = default;
    friend bool operator==(const Type3Grouping&, const Type3Grouping&) = default;
};

// accepts "mu=..;nu=..;alpha=..;beta=.." or the P3(...) key form
Type3Grouping parse_group(std::string_view text);

Type3Grouping mirror(const Type3Grouping& g);

enum class LinkKind { Type1, Type2, Type3, Unlink };

struct LinkType {
    LinkKind kind = LinkKind::Unlink;
    std::optional<Type3Grouping> grouping;
    std::vector<StripClass> classes;
    int components = 2;

    std::string name() const;
    nlohmann::json to_json() const;
};

bool is_standard(const RawPretzel& raw);

// Cancels +1 strips against -1 strips. An empty result is the two-component unlink.
RawPretzel standardize(const RawPretzel& raw);

// One orientation of the diagram with the top long strand running right to left.
struct Orientation {
    std::vector<StripClass> classes;
    bool bottom_right_to_left = false;
    int components = 0;
};

int component_count(const std::vector<int>& strips);
std::vector<Orientation> orientations(const std::vector<int>& strips);
// Honors the 'p'/'a' hints; otherwise the most parallel strips, then the
// smallest grouping. Zero strips are allowed here.
Orientation choose_orientation(const RawPretzel& raw);

LinkType classify(const RawPretzel& raw);

// Normalized groupings (nu_i > 1) with at most max_crossings crossings, in a fixed order.
void enumerate_type3(int max_crossings, const std::function<void(const Type3Grouping&)>& sink);
std::vector<Type3Grouping> enumerate_type3(int max_crossings);

}  // namespace pretzel
