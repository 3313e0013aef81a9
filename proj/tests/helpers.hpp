#pragma once

#include <memory>
#include <random>
#include <string>

#include "augcat/format.hpp"

namespace augcat::testing {

inline DgaPtr load_corpus(const std::string& name)
{
    return std::make_shared<Dga>(parse_dga_file(std::string(AUGCAT_DATA_DIR) + "/" + name));
}

inline DgaPtr trefoil()
{
    return load_corpus("trefoil.dga");
}

inline DgaPtr chekanov_eliashberg()
{
    return load_corpus("chekanov_eliashberg.dga");
}

inline DgaPtr unknot()
{
    return load_corpus("unknot.dga");
}

inline DgaPtr from_text(const std::string& text)
{
    return std::make_shared<Dga>(parse_dga(text));
}

inline Poly random_poly(const Dga& dga, std::mt19937& rng, int max_terms = 4,
                        int max_len = 3)
{
    std::uniform_int_distribution<int> term_dist(1, max_terms);
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<std::uint32_t> gen_dist(
        0, static_cast<std::uint32_t>(dga.size() - 1));
    std::uniform_int_distribution<std::uint32_t> coeff_dist(1, dga.characteristic() - 1);
    Poly out(dga.characteristic());
    int terms = term_dist(rng);
    for (int t = 0; t < terms; ++t) {
        Word w;
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i)
            w.push_back(gen_dist(rng));
        out.add_term(w, Scalar(coeff_dist(rng), dga.characteristic()));
    }
    return out;
}

} // namespace augcat::testing
