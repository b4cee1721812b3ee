#include "neo/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "neo/activations.hpp"
#include "neo/errors.hpp"

namespace neo {

namespace {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

ConfusionMatrix confusion(const std::vector<int>& preds, const std::vector<int>& truth) {
    if (preds.size() != truth.size()) {
        throw DataError("confusion: prediction and truth lengths differ");
    }
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        if ((preds[i] != 0 && preds[i] != 1) || (truth[i] != 0 && truth[i] != 1)) {
            throw DataError("confusion: labels must be binary");
        }
        if (truth[i] == 1) {
            preds[i] == 1 ? ++cm.tp : ++cm.fn;
        } else {
            preds[i] == 1 ? ++cm.fp : ++cm.tn;
        }
    }
    return cm;
}

Rates rates(const ConfusionMatrix& cm) {
    if (cm.total() == 0) {
        throw DataError("rates: empty confusion matrix");
    }
    Rates r;
    r.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
    r.sensitivity =
        cm.tp + cm.fn > 0 ? static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn) : 0.0;
    r.specificity =
        cm.tn + cm.fp > 0 ? static_cast<double>(cm.tn) / static_cast<double>(cm.tn + cm.fp) : 0.0;
    if (cm.tp + cm.fp > 0) {
        r.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
    } else {
        r.degenerate_precision = true;
    }
    if (r.precision + r.sensitivity > 0.0) {
        r.f1 = 2.0 * r.precision * r.sensitivity / (r.precision + r.sensitivity);
    } else {
        r.degenerate_f1 = true;
    }
    return r;
}

std::vector<RocPoint> roc_curve(const std::vector<double>& scores,
                                const std::vector<int>& truth) {
    if (scores.size() != truth.size()) {
        throw DataError("roc: score and truth lengths differ");
    }
    std::size_t pos = 0;
    for (const int label : truth) pos += label == 1 ? 1 : 0;
    const std::size_t neg = truth.size() - pos;
    if (pos == 0 || neg == 0) {
        throw DataError("roc: AUC undefined, truth labels contain a single class");
    }

    std::vector<std::size_t> order(scores.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    std::vector<RocPoint> roc;
    roc.push_back({scores[order.front()] + 1.0, 0.0, 0.0});  // nothing classified positive

    std::size_t tp = 0, fp = 0, i = 0;
    while (i < order.size()) {
        const double threshold = scores[order[i]];
        // consume the whole tie group; >= makes them flip together
        while (i < order.size() && scores[order[i]] == threshold) {
            truth[order[i]] == 1 ? ++tp : ++fp;
            ++i;
        }
        roc.push_back({threshold, static_cast<double>(fp) / static_cast<double>(neg),
                       static_cast<double>(tp) / static_cast<double>(pos)});
    }
    return roc;
}

double auc(const std::vector<RocPoint>& roc) {
    if (roc.size() < 2) {
        throw DataError("auc: curve needs at least two points");
    }
    double area = 0.0;
    for (std::size_t i = 1; i < roc.size(); ++i) {
        area += (roc[i].fpr - roc[i - 1].fpr) * (roc[i].tpr + roc[i - 1].tpr) * 0.5;
    }
    return area;
}

nlohmann::json EvalReport::to_json() const {
    nlohmann::json roc_json = nlohmann::json::array();
    for (const auto& p : roc) {
        roc_json.push_back({{"fpr", p.fpr}, {"threshold", p.threshold}, {"tpr", p.tpr}});
    }
    return nlohmann::json{
        {"auc", auc_value},
        {"confusion", {{"fn", cm.fn}, {"fp", cm.fp}, {"tn", cm.tn}, {"tp", cm.tp}}},
        {"loss", loss},
        {"rates",
         {{"accuracy", r.accuracy},
          {"degenerate_f1", r.degenerate_f1},
          {"degenerate_precision", r.degenerate_precision},
          {"f1", r.f1},
          {"precision", r.precision},
          {"sensitivity", r.sensitivity},
          {"specificity", r.specificity}}},
        {"roc", roc_json},
        {"threshold", threshold},
    };
}

std::string EvalReport::roc_csv() const {
    std::string out = "threshold,fpr,tpr\n";
    for (const auto& p : roc) {
        out += format_double(p.threshold);
        out.push_back(',');
        out += format_double(p.fpr);
        out.push_back(',');
        out += format_double(p.tpr);
        out.push_back('\n');
    }
    return out;
}

bool EvalReport::same_decisions(const EvalReport& other) const {
    const auto key = [](const EvalReport& e) {
        return std::tuple(e.cm.tp, e.cm.fp, e.cm.tn, e.cm.fn, e.r.accuracy, e.r.sensitivity,
                          e.r.specificity, e.r.precision, e.r.f1, e.auc_value, e.loss,
                          e.threshold);
    };
    if (key(*this) != key(other) || roc.size() != other.roc.size()) return false;
    for (std::size_t i = 0; i < roc.size(); ++i) {
        if (roc[i].threshold != other.roc[i].threshold || roc[i].fpr != other.roc[i].fpr ||
            roc[i].tpr != other.roc[i].tpr) {
            return false;
        }
    }
    return true;
}

EvalReport evaluate(const std::vector<double>& scores, const std::vector<int>& truth,
                    double threshold) {
    EvalReport report;
    report.threshold = threshold;
    std::vector<int> preds(scores.size());
    double loss = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        preds[i] = classify(scores[i], threshold);
        loss += bce_loss(scores[i], truth[i]);
    }
    report.cm = confusion(preds, truth);
    report.r = rates(report.cm);
    report.loss = scores.empty() ? 0.0 : loss / static_cast<double>(scores.size());
    report.roc = roc_curve(scores, truth);
    report.auc_value = auc(report.roc);
    return report;
}

}  // namespace neo
