#include "mvsbm/instance.hpp"

#include "mvsbm/error.hpp"
#include "mvsbm/sampling.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace mvsbm {

MVInstance::MVInstance(LabelVector z, std::vector<View> views, std::uint64_t seed)
    : z_(std::move(z)), views_(std::move(views)), seed_(seed)
{
    if (views_.empty())
        throw InvalidInput("MVInstance: need at least one view");
    for (const auto& v : views_) {
        if (v.graph.num_vertices() != z_.size() || v.signs.size() != z_.size())
            throw InvalidInput("MVInstance: view size differs from the label vector");
    }
}

std::vector<Graph> MVInstance::graphs() const
{
    std::vector<Graph> out;
    out.reserve(views_.size());
    for (const auto& v : views_)
        out.push_back(v.graph);
    return out;
}

std::vector<ViewParams> MVInstance::view_params() const
{
    std::vector<ViewParams> out;
    out.reserve(views_.size());
    for (const auto& v : views_)
        out.push_back(v.params);
    return out;
}

bool MVInstance::operator==(const MVInstance& other) const
{
    if (seed_ != other.seed_ || !(z_ == other.z_) || views_.size() != other.views_.size())
        return false;
    for (std::size_t l = 0; l < views_.size(); ++l) {
        const auto& a = views_[l];
        const auto& b = other.views_[l];
        if (!(a.signs == b.signs) || !(a.params == b.params) || !(a.graph == b.graph))
            return false;
    }
    return true;
}

MVInstance sample_mv_instance(int n, int k, std::span<const ViewParams> views, Rng& rng)
{
    if (views.empty())
        throw InvalidParameter("sample_mv_instance: need at least one view");
    const Rng base = rng.split(rng());
    Rng label_rng = base.split(0);
    auto z = sample_label_vector(n, k, label_rng);

    std::vector<View> out;
    out.reserve(views.size());
    for (std::size_t l = 0; l < views.size(); ++l) {
        Rng view_rng = base.split(l + 1);
        View v;
        v.mapping = sample_sign_mapping(k, view_rng);
        v.signs = v.mapping.apply(z);
        v.params = views[l];
        v.graph = sample_sbm2_conditional(v.signs, v.params, view_rng);
        out.push_back(std::move(v));
    }
    return MVInstance(std::move(z), std::move(out), rng.seed());
}

Graph union_graph(const MVInstance& instance)
{
    const auto graphs = instance.graphs();
    return union_graph(std::span<const Graph>(graphs));
}

namespace {

std::string format_double(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& token, const char* what)
{
    double x = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), x);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
        throw ParseError(std::string("instance: cannot parse ") + what + " from \"" + token + "\"");
    return x;
}

std::vector<int> read_ints(std::istream& in, int count, const char* what)
{
    std::vector<int> v(static_cast<std::size_t>(count));
    for (auto& x : v) {
        if (!(in >> x))
            throw ParseError(std::string("instance: truncated ") + what);
    }
    return v;
}

}  // namespace

void write_instance(std::ostream& out, const MVInstance& instance)
{
    const int n = instance.num_vertices();
    out << n << ' ' << instance.k() << ' ' << instance.num_views() << ' ' << instance.seed() << '\n';
    for (const auto& v : instance.views()) {
        out << format_double(v.params.d) << ' ' << format_double(v.params.eps) << '\n';
        for (int i = 0; i < n; ++i)
            out << (i ? " " : "") << v.signs[i];
        out << '\n';
        write_edge_list(out, v.graph);
    }
    const auto z = instance.labels();
    for (int i = 0; i < n; ++i)
        out << (i ? " " : "") << z[i];
    out << '\n';
}

MVInstance read_instance(std::istream& in)
{
    long long n = 0;
    long long k = 0;
    long long t = 0;
    std::uint64_t seed = 0;
    if (!(in >> n >> k >> t >> seed) || n < 1 || k < 1 || t < 1)
        throw ParseError("instance: expected header \"n k t seed\" with positive n, k, t");

    struct Raw {
        ViewParams params;
        std::vector<int> signs;
        Graph graph;
    };
    std::vector<Raw> raw;
    for (long long l = 0; l < t; ++l) {
        std::string d_tok;
        std::string eps_tok;
        if (!(in >> d_tok >> eps_tok))
            throw ParseError("instance: missing \"d eps\" line for view " + std::to_string(l));
        Raw r;
        try {
            r.params = ViewParams(parse_double(d_tok, "d"), parse_double(eps_tok, "eps"));
        } catch (const InvalidParameter& ex) {
            throw ParseError(std::string("instance: ") + ex.what());
        }
        r.signs = read_ints(in, static_cast<int>(n), "sign line");
        r.graph = read_edge_list(in);
        if (r.graph.num_vertices() != n)
            throw ParseError("instance: view " + std::to_string(l) + " edge list has the wrong vertex count");
        raw.push_back(std::move(r));
    }
    const auto labels = read_ints(in, static_cast<int>(n), "label line");

    try {
        LabelVector z(labels, static_cast<int>(k));
        std::vector<View> views;
        for (auto& r : raw) {
            // Recover f from (z, f(z)); labels absent from z default to +1.
            std::vector<int> table(static_cast<std::size_t>(k), 0);
            for (long long i = 0; i < n; ++i) {
                int& entry = table[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)] - 1)];
                const int s = r.signs[static_cast<std::size_t>(i)];
                if (entry != 0 && entry != s)
                    throw ParseError("instance: signs are not a function of the labels");
                entry = s;
            }
            for (auto& e : table)
                e = e == 0 ? 1 : e;
            View v;
            v.mapping = SignMapping(std::move(table));
            v.signs = SignVector(std::move(r.signs));
            v.params = r.params;
            v.graph = std::move(r.graph);
            views.push_back(std::move(v));
        }
        return MVInstance(std::move(z), std::move(views), seed);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& ex) {
        throw ParseError(std::string("instance: ") + ex.what());
    }
}

}  // namespace mvsbm
