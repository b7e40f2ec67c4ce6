#include <stdio.h>
#include <string.h>
#include "chordal_mds.h"

static int count_visits(const uint32_t *vertices, size_t len, void *user_data) {
    (void)vertices;
    (void)len;
    ++*(int *)user_data;
    return 0;
}

int main(void) {
    CmdsGraph *g = NULL;
    if (cmds_graph_parse("5 4\n0 1\n1 2\n1 3\n3 4\n", &g) != CMDS_STATUS_OK) return 1;
    int visits = 0;
    uint64_t count = 0;
    if (cmds_enumerate(g, 0, count_visits, &visits, &count) != CMDS_STATUS_OK) return 2;
    if (visits != 4 || count != 4) return 3;

    CmdsSolutions *s = NULL;
    if (cmds_solutions_new(g, 0, &s) != CMDS_STATUS_OK || cmds_solutions_len(s) != 4) return 4;
    const uint32_t *vertices = NULL;
    size_t len = 0;
    if (cmds_solutions_get(s, 9, &vertices, &len) != CMDS_STATUS_OUT_OF_RANGE) return 5;
    if (strlen(cmds_last_error_message()) == 0) return 6;
    cmds_solutions_free(s);
    cmds_graph_free(g);

    uint32_t cycle[] = {0, 1, 1, 2, 2, 3, 3, 0};
    if (cmds_graph_new(4, cycle, 4, &g) != CMDS_STATUS_OK) return 7;
    if (cmds_enumerate(g, 0, count_visits, &visits, NULL) != CMDS_STATUS_NOT_CHORDAL) return 8;
    cmds_graph_free(g);
    printf("ok\n");
    return 0;
}
