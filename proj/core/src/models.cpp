#include <algorithm>
#include <numeric>
#include <set>

#include "learn_internal.hpp"
#include "qsmote/errors.hpp"

namespace qsmote {

std::string model_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::LR: return "LR";
        case ModelKind::RF: return "RF";
        case ModelKind::SVM: return "SVM";
        case ModelKind::NB: return "NB";
        case ModelKind::DT: return "DT";
    }
    throw InternalError("unreachable model kind");
}

ModelKind model_from_name(const std::string& name) {
    for (ModelKind kind : kAllModelKinds)
        if (model_name(kind) == name) return kind;
    throw ConfigError("unknown model '" + name + "' (expected LR, RF, SVM, NB, or DT)");
}

TrainedModel train(ModelKind kind, const Eigen::MatrixXd& x, const std::vector<int>& y,
                   std::uint64_t seed, const TrainOptions& options) {
    if (x.rows() == 0) throw EmptyInput("cannot train on an empty matrix");
    if (static_cast<std::size_t>(x.rows()) != y.size())
        throw DimensionMismatch("feature rows " + std::to_string(x.rows()) +
                                " != label count " + std::to_string(y.size()));

    const std::set<int> distinct(y.begin(), y.end());
    if (distinct.size() < 2) throw SingleClass("training requires at least two classes");

    TrainedModel model;
    model.kind = kind;
    model.seed = seed;
    model.classes.assign(distinct.begin(), distinct.end());

    switch (kind) {
        case ModelKind::LR:
            model.params = fit_logistic(x, y, model.classes, options.logistic);
            break;
        case ModelKind::RF:
            model.params = fit_forest(x, y, seed, options.forest);
            break;
        case ModelKind::SVM:
            model.params = fit_svm(x, y, model.classes, options.svm);
            break;
        case ModelKind::NB:
            model.params = fit_naive_bayes(x, y, model.classes);
            break;
        case ModelKind::DT: {
            std::vector<Eigen::Index> indices(static_cast<std::size_t>(x.rows()));
            std::iota(indices.begin(), indices.end(), Eigen::Index{0});
            model.params = build_cart(x, y, indices, FeatureSubset::All, nullptr);
            break;
        }
    }
    return model;
}

std::vector<int> predict(const TrainedModel& model, const Eigen::MatrixXd& x) {
    const Eigen::Index expected = [&]() -> Eigen::Index {
        switch (model.kind) {
            case ModelKind::LR: return std::get<LogisticModel>(model.params).weights.cols();
            case ModelKind::SVM: {
                const auto& svm = std::get<SvmModel>(model.params);
                return svm.per_class.empty() ? x.cols()
                                             : svm.per_class.front().support_vectors.cols();
            }
            case ModelKind::NB: return std::get<NaiveBayesModel>(model.params).means.cols();
            case ModelKind::DT: return std::get<DecisionTreeModel>(model.params).n_features;
            case ModelKind::RF: {
                const auto& forest = std::get<ForestModel>(model.params);
                return forest.trees.empty() ? x.cols() : forest.trees.front().n_features;
            }
        }
        return x.cols();
    }();
    if (expected >= 0 && x.cols() != expected)
        throw DimensionMismatch("model trained on " + std::to_string(expected) +
                                " features, got " + std::to_string(x.cols()));

    switch (model.kind) {
        case ModelKind::LR:
            return predict_logistic(std::get<LogisticModel>(model.params), model.classes, x);
        case ModelKind::RF:
            return predict_forest(std::get<ForestModel>(model.params), model.classes, x);
        case ModelKind::SVM:
            return predict_svm(std::get<SvmModel>(model.params), model.classes, x);
        case ModelKind::NB:
            return predict_naive_bayes(std::get<NaiveBayesModel>(model.params), model.classes, x);
        case ModelKind::DT: {
            const auto& tree = std::get<DecisionTreeModel>(model.params);
            std::vector<int> out(static_cast<std::size_t>(x.rows()));
            for (Eigen::Index i = 0; i < x.rows(); ++i)
                out[static_cast<std::size_t>(i)] = predict_tree(tree, x.row(i));
            return out;
        }
    }
    throw InternalError("unreachable model kind");
}

Eigen::MatrixXd svm_decision_values(const TrainedModel& model, const Eigen::MatrixXd& x) {
    return svm_decisions(std::get<SvmModel>(model.params), x);
}

}  // namespace qsmote
