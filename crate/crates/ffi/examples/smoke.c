#include <stdio.h>
#include "qcontract.h"

int main(void) {
    QcGraph *g = NULL;
    if (qc_graph_from_graph6("JhdHKdHHKc_", &g) != QC_STATUS_OK) return 1;
    size_t kappa = 0;
    bool quasi = false;
    QcVerdict verdict;
    qc_vertex_connectivity(g, &kappa);
    qc_is_quasi_k_connected(g, 5, &quasi);
    QcStatus s = qc_classify_contraction(g, 0, 4, 5, &verdict);
    printf("n=%zu m=%zu kappa=%zu quasi5=%d verdict(0,4)=%d (%s)\n", qc_graph_vertex_count(g),
           qc_graph_edge_count(g), kappa, quasi, verdict, qc_status_message(s));
    QcGraph *h = NULL;
    s = qc_contract_edge(g, 0, 1, &h);
    char buf[32];
    size_t needed = 0;
    qc_graph_to_graph6(h, buf, sizeof buf, &needed);
    printf("G/01 = %s\n", buf);
    s = qc_contract_edge(g, 0, 2, &h);
    printf("contract 0-2: %s\n", qc_status_message(s));
    qc_graph_free(h);
    qc_graph_free(g);
    return 0;
}
