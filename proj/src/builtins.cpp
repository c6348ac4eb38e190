#include "linarr/arrangement.hpp"
#include "linarr/errors.hpp"
#include "linarr/poly.hpp"

namespace linarr {

namespace {

Arrangement from_product(const std::string& expr) {
    auto lines = parse_linear_factors(expr);
    if (!lines) throw InvariantViolation("builtin expression is not a product of lines");
    return Arrangement(*lines);
}

} // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"AZ", "AZp", "AD", "ADp", "BZ", "BZp", "TRIANGLE"};
    return names;
}

std::optional<Arrangement> builtin_arrangement(const std::string& name) {
    if (name == "AZ")
        return from_product("xyz(x+y-z)(x-y+z)(2x-2y+z)(2x-y-2z)(2x+y+z)(2x-y-z)");
    if (name == "AD")
        return from_product("xy(x-y-z)(x-y+z)(2x+y-2z)(x+3y-3z)(3x+2y+3z)(x+5y+5z)(7x-4y-z)");
    if (name == "ADp")
        return from_product("xy(4x-5y-5z)(x-y+z)(16x+13y-20z)(x+3y-3z)(3x+2y+3z)(x+5y+5z)(7x-4y-z)");
    if (name == "TRIANGLE")
        return from_product("xyz");
    if (name == "AZp") {
        // frozen from move_triple_point(AZ, (0:1:1), (0:3:1)); the fixture is
        // validated against the live construction in the test suite
        return from_product("xyz(3x+y-3z)(x-y+3z)(2x-2y+z)(2x-y-2z)(2x+y+z)(2x-y-z)");
    }
    if (name == "BZ")
        return add_line(*builtin_arrangement("AZ"), LinearForm(1, -1, -1));
    if (name == "BZp")
        return add_line(*builtin_arrangement("AZp"), LinearForm(1, -1, -1));
    return std::nullopt;
}

} // namespace linarr
