#include "augcat/format.hpp"

#include <fstream>
#include <sstream>

namespace augcat {

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#')
            break;
        tokens.push_back(tok);
    }
    return tokens;
}

bool is_integer(const std::string& tok)
{
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size())
        return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            return false;
    return true;
}

/* One term: optional integer coefficient, then generator names. */
void parse_term(const Dga& dga, const std::vector<std::string>& tokens, std::size_t begin,
                std::size_t end, Poly& into, std::size_t line)
{
    if (begin == end)
        throw ParseError(line, "empty term");
    std::uint32_t p = dga.characteristic();
    std::int64_t coeff = 1;
    std::size_t i = begin;
    if (is_integer(tokens[i])) {
        coeff = std::stoll(tokens[i]);
        ++i;
    }
    Word w;
    for (; i < end; ++i) {
        auto g = dga.find(tokens[i]);
        if (!g)
            throw ParseError(line, "unknown generator '" + tokens[i] + "'");
        w.push_back(*g);
    }
    into.add_term(w, Scalar(coeff, p));
}

Poly parse_poly_tokens(const Dga& dga, const std::vector<std::string>& tokens,
                       std::size_t begin, std::size_t line)
{
    Poly result(dga.characteristic());
    if (begin == tokens.size())
        throw ParseError(line, "missing right-hand side");
    if (tokens.size() - begin == 1 && tokens[begin] == "0")
        return result;
    std::size_t term_begin = begin;
    for (std::size_t i = begin; i <= tokens.size(); ++i) {
        if (i == tokens.size() || tokens[i] == "+") {
            parse_term(dga, tokens, term_begin, i, result, line);
            term_begin = i + 1;
        }
    }
    return result;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

Dga parse_dga(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    std::uint32_t p = 0;
    std::vector<Generator> gens;
    std::unordered_map<std::string, GenIndex> index;
    struct PendingDiff {
        std::string gen;
        std::vector<std::string> tokens;
        std::size_t line;
    };
    std::vector<PendingDiff> pending;

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty())
            continue;
        const std::string& directive = tokens[0];
        if (directive == "field") {
            if (p != 0)
                throw ParseError(lineno, "duplicate field directive");
            if (tokens.size() != 2 || !is_integer(tokens[1]))
                throw ParseError(lineno, "expected: field <prime>");
            long long v = std::stoll(tokens[1]);
            if (v < 2 || v > 65521 || !is_prime(static_cast<std::uint32_t>(v)))
                throw ParseError(lineno, "field characteristic must be a prime below 65522");
            p = static_cast<std::uint32_t>(v);
        } else if (directive == "gen") {
            if (p == 0)
                throw ParseError(lineno, "field directive must come before gen");
            if (tokens.size() != 3 || !is_integer(tokens[2]))
                throw ParseError(lineno, "expected: gen <name> <integer-grading>");
            if (is_integer(tokens[1]))
                throw ParseError(lineno, "generator names may not be integers");
            if (index.count(tokens[1]))
                throw ParseError(lineno, "duplicate generator '" + tokens[1] + "'");
            index.emplace(tokens[1], static_cast<GenIndex>(gens.size()));
            gens.push_back({tokens[1], static_cast<int>(std::stoll(tokens[2]))});
        } else if (directive == "diff") {
            if (p == 0)
                throw ParseError(lineno, "field directive must come before diff");
            if (tokens.size() < 4 || tokens[2] != "=")
                throw ParseError(lineno, "expected: diff <name> = <terms>");
            pending.push_back({tokens[1], tokens, lineno});
        } else {
            throw ParseError(lineno, "unknown directive '" + directive + "'");
        }
    }
    if (p == 0)
        throw ParseError(lineno, "missing field directive");

    Dga skeleton(p, gens, std::vector<Poly>(gens.size(), Poly(p)));
    std::vector<Poly> diffs(gens.size(), Poly(p));
    std::vector<bool> seen(gens.size(), false);
    for (const PendingDiff& d : pending) {
        auto g = skeleton.find(d.gen);
        if (!g)
            throw ParseError(d.line, "diff for unknown generator '" + d.gen + "'");
        if (seen[*g])
            throw ParseError(d.line, "duplicate diff for '" + d.gen + "'");
        seen[*g] = true;
        diffs[*g] = parse_poly_tokens(skeleton, d.tokens, 3, d.line);
    }
    return Dga(p, std::move(gens), std::move(diffs));
}

Dga parse_dga_file(const std::string& path)
{
    return parse_dga(read_file(path));
}

std::string print_poly(const Dga& dga, const Poly& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        if (!first)
            out << " + ";
        first = false;
        if (w.empty()) {
            out << c;
            continue;
        }
        if (c != 1)
            out << c << ' ';
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                out << ' ';
            out << dga.generator(w[i]).name;
        }
    }
    return out.str();
}

Poly parse_poly(const Dga& dga, const std::string& text)
{
    std::vector<std::string> tokens = tokenize(text);
    try {
        return parse_poly_tokens(dga, tokens, 0, 1);
    } catch (const ParseError& e) {
        throw AlgebraError(e.what());
    }
}

std::string print_dga(const Dga& dga)
{
    std::ostringstream out;
    out << "field " << dga.characteristic() << '\n';
    for (const Generator& g : dga.generators())
        out << "gen " << g.name << ' ' << g.grading << '\n';
    for (GenIndex g = 0; g < dga.size(); ++g)
        if (!dga.differential(g).is_zero())
            out << "diff " << dga.generator(g).name << " = "
                << print_poly(dga, dga.differential(g)) << '\n';
    return out.str();
}

DgaMorphism parse_morphism(const std::string& text, DgaPtr source, DgaPtr target)
{
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<Poly> images(source->size(), Poly(target->characteristic()));
    std::vector<bool> seen(source->size(), false);
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty())
            continue;
        if (tokens[0] != "img" || tokens.size() < 4 || tokens[2] != "=")
            throw ParseError(lineno, "expected: img <gen> = <poly>");
        auto g = source->find(tokens[1]);
        if (!g)
            throw ParseError(lineno, "unknown source generator '" + tokens[1] + "'");
        if (seen[*g])
            throw ParseError(lineno, "duplicate img for '" + tokens[1] + "'");
        seen[*g] = true;
        images[*g] = parse_poly_tokens(*target, tokens, 3, lineno);
    }
    for (GenIndex g = 0; g < source->size(); ++g)
        if (!seen[g])
            throw ParseError(lineno, "missing img line for '" + source->generator(g).name + "'");
    return DgaMorphism(std::move(source), std::move(target), std::move(images));
}

DgaMorphism parse_morphism_file(const std::string& path, DgaPtr source, DgaPtr target)
{
    return parse_morphism(read_file(path), std::move(source), std::move(target));
}

} // namespace augcat
