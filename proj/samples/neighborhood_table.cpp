// Prints Gamma_d(u) for the short elements u and small degrees d, one line per
// pair, next to the chain-oracle result.

#include <iostream>

#include <dcn/dcn.hpp>

int main()
{
    for (const dcn::GroupElement& u : dcn::enumerate_up_to_length(2)) {
        for (std::uint64_t a = 0; a <= 2; ++a) {
            for (std::uint64_t b = 0; b <= 2; ++b) {
                const dcn::Degree d{a, b};
                const auto closed = dcn::curve_neighborhood(u, d);
                const auto oracle = dcn::curve_neighborhood_oracle(u, d);
                std::cout << "Gamma_" << dcn::to_string(d) << "(" << dcn::to_string(u) << ") = "
                          << dcn::to_string(closed) << (closed == oracle ? "" : "  [oracle disagrees]") << "\n";
            }
        }
    }
}
