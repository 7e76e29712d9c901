#include "mplang/gnn.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "mplang/errors.hpp"

namespace mplang {

void GnnModel::validate() const {
    if (layers.empty()) throw ModelError("model must have at least one layer");
    int prev = input_dim();
    for (std::size_t t = 0; t < layers.size(); ++t) {
        const GnnLayer& l = layers[t];
        std::string where = "layer " + std::to_string(t);
        if (l.w1.size() != l.w2.size()) throw ModelError(where + ": W1/W2 row counts differ");
        if (l.bias.size() != l.w1.size() || l.act.size() != l.w1.size())
            throw ModelError(where + ": bias/act length must match the row count");
        if (l.w1.empty()) throw ModelError(where + ": empty layer");
        for (const auto& row : l.w1)
            if (static_cast<int>(row.size()) != prev) throw ModelError(where + ": ragged or mismatched W1");
        for (const auto& row : l.w2)
            if (static_cast<int>(row.size()) != prev) throw ModelError(where + ": ragged or mismatched W2");
        prev = l.out_dim();
    }
    if (prev != 1) throw ModelError("final layer must have output dimension 1");
}

NodeVector eval_gnn(const GnnModel& m, const EmbeddedGraph& g, const Catalogue& cat) {
    m.validate();
    if (m.input_dim() != g.dim())
        throw EvalError("model input dimension " + std::to_string(m.input_dim()) +
                        " does not match graph dimension " + std::to_string(g.dim()));
    int n = g.node_count();
    std::vector<std::vector<Rational>> cur(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) cur[static_cast<std::size_t>(v)] = g.row(v);

    for (const GnnLayer& layer : m.layers) {
        int in = layer.in_dim(), out = layer.out_dim();
        std::vector<std::vector<Rational>> nsum(static_cast<std::size_t>(n),
                                                std::vector<Rational>(static_cast<std::size_t>(in)));
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbours(v))
                for (int j = 0; j < in; ++j)
                    nsum[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] +=
                        cur[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)];

        std::vector<std::vector<Rational>> next(static_cast<std::size_t>(n),
                                                std::vector<Rational>(static_cast<std::size_t>(out)));
        for (int v = 0; v < n; ++v) {
            for (int r = 0; r < out; ++r) {
                Rational pre = layer.bias[static_cast<std::size_t>(r)];
                for (int j = 0; j < in; ++j) {
                    const Rational& a = layer.w1[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                    if (!a.is_zero()) pre += a * cur[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
                    const Rational& b = layer.w2[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                    if (!b.is_zero()) pre += b * nsum[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
                }
                next[static_cast<std::size_t>(v)][static_cast<std::size_t>(r)] =
                    cat.at(layer.act[static_cast<std::size_t>(r)])(pre);
            }
        }
        cur = std::move(next);
    }

    NodeVector out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = cur[static_cast<std::size_t>(v)][0];
    return out;
}

namespace {

// Rebuilds the tree with structural deduplication so that pointer
// equality coincides with structural equality.
class Interner {
public:
    ExprPtr intern(const ExprPtr& e) {
        auto done = done_.find(e.get());
        if (done != done_.end()) return done->second;
        ExprPtr node;
        switch (e->kind()) {
            case Expr::Kind::One:
            case Expr::Kind::Feature:
                node = e;
                break;
            case Expr::Kind::Scale:
                node = scale(e->coeff(), intern(e->child()));
                break;
            case Expr::Kind::Add:
                node = add(intern(e->left()), intern(e->right()));
                break;
            case Expr::Kind::Diamond:
                node = diamond(intern(e->child()));
                break;
            case Expr::Kind::Apply:
                node = apply_act(e->act(), intern(e->child()));
                break;
        }
        std::size_t h = structural_hash(*node);
        for (const ExprPtr& cand : buckets_[h])
            if (structural_equal(*cand, *node)) {
                done_.emplace(e.get(), cand);
                return cand;
            }
        buckets_[h].push_back(node);
        done_.emplace(e.get(), node);
        return node;
    }

private:
    std::unordered_map<const Expr*, ExprPtr> done_;
    std::unordered_map<std::size_t, std::vector<ExprPtr>> buckets_;
};

// expr = sum of coeff * atom + constant, where atoms are the nodes that
// need a channel of their own: features, neighbour sums, activation
// applications. The constant absorbs One.
struct Cone {
    std::vector<std::pair<const Expr*, Rational>> terms;
    Rational constant;
};

void cone_walk(const ExprPtr& e, const Rational& mult, Cone& out) {
    switch (e->kind()) {
        case Expr::Kind::One:
            out.constant += mult;
            return;
        case Expr::Kind::Scale:
            cone_walk(e->child(), mult * e->coeff(), out);
            return;
        case Expr::Kind::Add:
            cone_walk(e->left(), mult, out);
            cone_walk(e->right(), mult, out);
            return;
        case Expr::Kind::Feature:
        case Expr::Kind::Diamond:
        case Expr::Kind::Apply: {
            for (auto& [atom, c] : out.terms)
                if (atom == e.get()) {
                    c += mult;
                    return;
                }
            out.terms.emplace_back(e.get(), mult);
            return;
        }
    }
}

Cone cone_of(const ExprPtr& e) {
    Cone c;
    cone_walk(e, Rational(1), c);
    c.terms.erase(std::remove_if(c.terms.begin(), c.terms.end(),
                                 [](const auto& t) { return t.second.is_zero(); }),
                  c.terms.end());
    return c;
}

class Compiler {
public:
    Compiler(int dim, const Catalogue& cat) : dim_(dim), cat_(cat) {}

    GnnModel run(const ExprPtr& raw) {
        ExprPtr root = interner_.intern(raw);
        interned_root_ = root.get();
        collect(root);

        // Scheduling: the layer at which each atom's channel is computed.
        for (const ExprPtr& a : atoms_) avail(a);

        int out_layer = 1;
        Cone root_cone;
        const bool root_is_atom = is_atom(*root);
        if (root_is_atom) {
            out_layer = std::max(1, avail_.at(root.get()));
        } else {
            root_cone = cone_of(root);
            int need = 0;
            for (auto& [atom, c] : root_cone.terms) need = std::max(need, avail_.at(atom));
            out_layer = std::max(1, need + 1);
        }

        // Channel lifetimes: reads happen one layer below the consumer.
        for (const ExprPtr& a : atoms_) {
            int t = avail_.at(a.get());
            if (a->kind() == Expr::Kind::Diamond || a->kind() == Expr::Kind::Apply) {
                Cone cone = cone_of(a->child());
                for (auto& [atom, c] : cone.terms) record_read(atom, t - 1);
                if (a->kind() == Expr::Kind::Diamond && !cone.constant.is_zero())
                    record_read(one_atom(), t - 1);
            }
        }
        if (!root_is_atom)
            for (auto& [atom, c] : root_cone.terms) record_read(atom, out_layer - 1);

        // Per-layer channel lists in first-collected order. The final
        // layer holds the single output row.
        std::vector<std::vector<const Expr*>> channels(static_cast<std::size_t>(out_layer) + 1);
        for (const ExprPtr& a : atoms_) {
            const Expr* atom = a.get();
            int first = a->kind() == Expr::Kind::Feature ? 1 : avail_.at(atom);
            int last = last_read_.count(atom) ? last_read_.at(atom) : 0;
            for (int t = first; t <= std::min(last, out_layer - 1); ++t)
                channels[static_cast<std::size_t>(t)].push_back(atom);
        }

        GnnModel model;
        for (int t = 1; t <= out_layer; ++t) {
            std::vector<const Expr*> prev =
                t == 1 ? std::vector<const Expr*>{} : channels[static_cast<std::size_t>(t - 1)];
            int in = t == 1 ? dim_ : static_cast<int>(prev.size());
            auto col_of = [&](const Expr* atom) -> int {
                if (t == 1) {
                    // Layer 0 columns are the input features.
                    return atom->feature_index() - 1;
                }
                for (std::size_t j = 0; j < prev.size(); ++j)
                    if (prev[j] == atom) return static_cast<int>(j);
                throw ModelError("internal: channel not present in previous layer");
            };

            GnnLayer layer;
            auto emit = [&](const Expr* atom) {
                std::vector<Rational> w1(static_cast<std::size_t>(in));
                std::vector<Rational> w2(static_cast<std::size_t>(in));
                Rational bias(0);
                ActivationId act = "id";
                if (atom == nullptr) {
                    // Synthetic output row for an affine root.
                    for (auto& [a, c] : root_cone.terms) w1[static_cast<std::size_t>(col_of(a))] = c;
                    bias = root_cone.constant;
                } else if (avail_.at(atom) < t) {
                    w1[static_cast<std::size_t>(col_of(atom))] = Rational(1);  // carry
                } else {
                    switch (atom->kind()) {
                        case Expr::Kind::One:
                            bias = Rational(1);
                            break;
                        case Expr::Kind::Feature:
                            w1[static_cast<std::size_t>(atom->feature_index() - 1)] = Rational(1);
                            break;
                        case Expr::Kind::Diamond: {
                            Cone cone = cone_of(self_ptr(atom)->child());
                            for (auto& [a, c] : cone.terms) w2[static_cast<std::size_t>(col_of(a))] = c;
                            if (!cone.constant.is_zero())
                                w2[static_cast<std::size_t>(col_of(one_atom()))] = cone.constant;
                            break;
                        }
                        case Expr::Kind::Apply: {
                            Cone cone = cone_of(self_ptr(atom)->child());
                            for (auto& [a, c] : cone.terms) w1[static_cast<std::size_t>(col_of(a))] = c;
                            bias = cone.constant;
                            act = atom->act();
                            break;
                        }
                        case Expr::Kind::Scale:
                        case Expr::Kind::Add:
                            throw ModelError("internal: affine node scheduled as channel");
                    }
                }
                layer.w1.push_back(std::move(w1));
                layer.w2.push_back(std::move(w2));
                layer.bias.push_back(std::move(bias));
                layer.act.push_back(std::move(act));
            };

            if (t == out_layer) {
                emit(root_is_atom ? interned_root_ : nullptr);
            } else {
                for (const Expr* atom : channels[static_cast<std::size_t>(t)]) emit(atom);
                if (layer.w1.empty()) {
                    // Keep the chain connected when nothing is live here.
                    layer.w1.push_back(std::vector<Rational>(static_cast<std::size_t>(in)));
                    layer.w2.push_back(std::vector<Rational>(static_cast<std::size_t>(in)));
                    layer.bias.push_back(Rational(0));
                    layer.act.push_back("id");
                }
            }
            model.layers.push_back(std::move(layer));
        }
        model.validate();
        return model;
    }

private:
    static bool is_atom(const Expr& e) {
        switch (e.kind()) {
            case Expr::Kind::One:
            case Expr::Kind::Feature:
            case Expr::Kind::Diamond:
            case Expr::Kind::Apply:
                return true;
            default:
                return false;
        }
    }

    const Expr* one_atom() {
        ExprPtr o = interner_.intern(one());
        return o.get();
    }

    const ExprPtr& self_ptr(const Expr* atom) const { return ptr_of_.at(atom); }

    void record_read(const Expr* atom, int layer) {
        if (atom->kind() == Expr::Kind::Feature && layer == 0) return;  // input read
        auto [it, inserted] = last_read_.emplace(atom, layer);
        if (!inserted) it->second = std::max(it->second, layer);
    }

    void collect(const ExprPtr& e) {
        if (seen_.count(e.get())) return;
        seen_.insert(e.get());
        switch (e->kind()) {
            case Expr::Kind::One:
                break;
            case Expr::Kind::Feature:
                if (e->feature_index() > dim_)
                    throw EvalError("feature index P" + std::to_string(e->feature_index()) +
                                    " exceeds dimension " + std::to_string(dim_));
                break;
            case Expr::Kind::Scale:
            case Expr::Kind::Diamond:
                collect(e->child());
                break;
            case Expr::Kind::Add:
                collect(e->left());
                collect(e->right());
                break;
            case Expr::Kind::Apply:
                cat_.at(e->act());  // reject unknown activations
                collect(e->child());
                break;
        }
        if (is_atom(*e) && !ptr_of_.count(e.get())) {
            atoms_.push_back(e);
            ptr_of_.emplace(e.get(), e);
        }
    }

    int avail(const ExprPtr& e) {
        auto it = avail_.find(e.get());
        if (it != avail_.end()) return it->second;
        int out = 0;
        switch (e->kind()) {
            case Expr::Kind::Feature:
                out = 0;
                break;
            case Expr::Kind::One:
                out = 1;
                break;
            case Expr::Kind::Diamond: {
                Cone cone = cone_of(e->child());
                int need = cone.constant.is_zero() ? 0 : 1;
                for (auto& [atom, c] : cone.terms) need = std::max(need, avail(self_ptr(atom)));
                out = 1 + need;
                break;
            }
            case Expr::Kind::Apply: {
                Cone cone = cone_of(e->child());
                int need = 0;
                for (auto& [atom, c] : cone.terms) need = std::max(need, avail(self_ptr(atom)));
                out = 1 + need;
                break;
            }
            default:
                throw ModelError("internal: avail queried on affine node");
        }
        avail_.emplace(e.get(), out);
        return out;
    }

    int dim_;
    const Catalogue& cat_;
    Interner interner_;
    std::vector<ExprPtr> atoms_;  // in first-collected (postorder-independent) order
    std::unordered_map<const Expr*, ExprPtr> ptr_of_;
    std::unordered_map<const Expr*, int> avail_;
    std::unordered_map<const Expr*, int> last_read_;
    std::unordered_set<const Expr*> seen_;
    const Expr* interned_root_ = nullptr;
};

}  // namespace

GnnModel compile(const ExprPtr& e, int dim, const Catalogue& cat) {
    if (dim < 1) throw EvalError("dimension must be >= 1");
    Compiler c(dim, cat);
    return c.run(e);
}

ExprPtr decompile(const GnnModel& m) {
    m.validate();
    std::vector<ExprPtr> prev;
    for (int j = 1; j <= m.input_dim(); ++j) prev.push_back(feature(j));

    for (const GnnLayer& layer : m.layers) {
        std::vector<ExprPtr> cur;
        for (int r = 0; r < layer.out_dim(); ++r) {
            ExprPtr affine;
            auto append = [&affine](ExprPtr term) {
                affine = affine ? add(std::move(affine), std::move(term)) : std::move(term);
            };
            for (int j = 0; j < layer.in_dim(); ++j) {
                const Rational& a = layer.w1[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                if (!a.is_zero())
                    append(a == Rational(1) ? prev[static_cast<std::size_t>(j)]
                                            : scale(a, prev[static_cast<std::size_t>(j)]));
                const Rational& b = layer.w2[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                if (!b.is_zero())
                    append(b == Rational(1) ? diamond(prev[static_cast<std::size_t>(j)])
                                            : scale(b, diamond(prev[static_cast<std::size_t>(j)])));
            }
            const Rational& bias = layer.bias[static_cast<std::size_t>(r)];
            if (!bias.is_zero()) append(constant(bias));
            if (!affine) affine = constant(Rational(0));
            const ActivationId& act = layer.act[static_cast<std::size_t>(r)];
            cur.push_back(act == "id" ? affine : apply_act(act, affine));
        }
        prev = std::move(cur);
    }
    return prev[0];
}

namespace {

using nlohmann::json;

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const Rational& x : row) r.push_back(x.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    Matrix m;
    for (const json& row : j) {
        std::vector<Rational> r;
        for (const json& cell : row) {
            if (!cell.is_string()) throw FileError("matrix entries must be rational strings");
            r.push_back(Rational::parse(cell.get<std::string>()));
        }
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

std::string model_to_json(const GnnModel& m) {
    json j;
    json layers = json::array();
    for (const GnnLayer& l : m.layers) {
        json layer;
        layer["w1"] = matrix_json(l.w1);
        layer["w2"] = matrix_json(l.w2);
        json bias = json::array();
        for (const Rational& x : l.bias) bias.push_back(x.str());
        layer["bias"] = std::move(bias);
        layer["act"] = l.act;
        layers.push_back(std::move(layer));
    }
    j["layers"] = std::move(layers);
    return j.dump() + "\n";
}

GnnModel model_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        GnnModel m;
        for (const json& layer : j.at("layers")) {
            GnnLayer l;
            l.w1 = matrix_from_json(layer.at("w1"));
            l.w2 = matrix_from_json(layer.at("w2"));
            for (const json& cell : layer.at("bias")) l.bias.push_back(Rational::parse(cell.get<std::string>()));
            l.act = layer.at("act").get<std::vector<ActivationId>>();
            m.layers.push_back(std::move(l));
        }
        m.validate();
        return m;
    } catch (const json::exception& e) {
        throw FileError(std::string("malformed model file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FileError(e.what());
    } catch (const ModelError& e) {
        throw FileError(e.what());
    }
}

void save_model(const GnnModel& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot open '" + path + "' for writing");
    out << model_to_json(m);
}

GnnModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return model_from_json(ss.str());
}

}  // namespace mplang
