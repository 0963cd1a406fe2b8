package bulk;

/** Stage 24 of the batch transform chain. */
public class Stage24 {
    private final Stage25 next;
    private long checksum;

    public Stage24() {
        this.next = new Stage25();
        this.checksum = 0;
    }

    public int forward(int seed) {
        int value = seed;
        value = op001(value, 2);
        value = op002(value, 3);
        value = op003(value, 4);
        value = op004(value, 5);
        value = op005(value, 6);
        checksum += value;
        return next.forward(value);
    }

    public long checksum() {
        return checksum;
    }

    public int op001(int a, int b) {
        int acc = a * 3 + b;
        acc = acc ^ (a << 2);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 912;
        return acc + 1;
    }

    public int op002(int a, int b) {
        int acc = a * 4 + b;
        acc = acc ^ (a << 3);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 913;
        return acc + 2;
    }

    public int op003(int a, int b) {
        int acc = a * 5 + b;
        acc = acc ^ (a << 4);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 914;
        return acc + 3;
    }

    public int op004(int a, int b) {
        int acc = a * 6 + b;
        acc = acc ^ (a << 5);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 915;
        return acc + 4;
    }

    public int op005(int a, int b) {
        int acc = a * 7 + b;
        acc = acc ^ (a << 1);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 916;
        return acc + 5;
    }

    public int op006(int a, int b) {
        int acc = a * 8 + b;
        acc = acc ^ (a << 2);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 917;
        return acc + 6;
    }

    public int op007(int a, int b) {
        int acc = a * 2 + b;
        acc = acc ^ (a << 3);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 918;
        return acc + 7;
    }

    public int op008(int a, int b) {
        int acc = a * 3 + b;
        acc = acc ^ (a << 4);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 919;
        return acc + 8;
    }

    public int op009(int a, int b) {
        int acc = a * 4 + b;
        acc = acc ^ (a << 5);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 920;
        return acc + 9;
    }

    public int op010(int a, int b) {
        int acc = a * 5 + b;
        acc = acc ^ (a << 1);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 921;
        return acc + 10;
    }

    public int op011(int a, int b) {
        int acc = a * 6 + b;
        acc = acc ^ (a << 2);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 922;
        return acc + 11;
    }

    public int op012(int a, int b) {
        int acc = a * 7 + b;
        acc = acc ^ (a << 3);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 923;
        return acc + 12;
    }

    public int op013(int a, int b) {
        int acc = a * 8 + b;
        acc = acc ^ (a << 4);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 924;
        return acc + 13;
    }

    public int op014(int a, int b) {
        int acc = a * 2 + b;
        acc = acc ^ (a << 5);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 925;
        return acc + 14;
    }

    public int op015(int a, int b) {
        int acc = a * 3 + b;
        acc = acc ^ (a << 1);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 926;
        return acc + 15;
    }

    public int op016(int a, int b) {
        int acc = a * 4 + b;
        acc = acc ^ (a << 2);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 927;
        return acc + 16;
    }

    public int op017(int a, int b) {
        int acc = a * 5 + b;
        acc = acc ^ (a << 3);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 928;
        return acc + 17;
    }

    public int op018(int a, int b) {
        int acc = a * 6 + b;
        acc = acc ^ (a << 4);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 929;
        return acc + 18;
    }

    public int op019(int a, int b) {
        int acc = a * 7 + b;
        acc = acc ^ (a << 5);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 930;
        return acc + 19;
    }

    public int op020(int a, int b) {
        int acc = a * 8 + b;
        acc = acc ^ (a << 1);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 931;
        return acc + 20;
    }

    public int op021(int a, int b) {
        int acc = a * 2 + b;
        acc = acc ^ (a << 2);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 932;
        return acc + 21;
    }

    public int op022(int a, int b) {
        int acc = a * 3 + b;
        acc = acc ^ (a << 3);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 933;
        return acc + 22;
    }

    public int op023(int a, int b) {
        int acc = a * 4 + b;
        acc = acc ^ (a << 4);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 934;
        return acc + 23;
    }

    public int op024(int a, int b) {
        int acc = a * 5 + b;
        acc = acc ^ (a << 5);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 935;
        return acc + 24;
    }

    public int op025(int a, int b) {
        int acc = a * 6 + b;
        acc = acc ^ (a << 1);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 936;
        return acc + 25;
    }

    public int op026(int a, int b) {
        int acc = a * 7 + b;
        acc = acc ^ (a << 2);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 937;
        return acc + 26;
    }

    public int op027(int a, int b) {
        int acc = a * 8 + b;
        acc = acc ^ (a << 3);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 938;
        return acc + 27;
    }

    public int op028(int a, int b) {
        int acc = a * 2 + b;
        acc = acc ^ (a << 4);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 939;
        return acc + 28;
    }

    public int op029(int a, int b) {
        int acc = a * 3 + b;
        acc = acc ^ (a << 5);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 940;
        return acc + 29;
    }

    public int op030(int a, int b) {
        int acc = a * 4 + b;
        acc = acc ^ (a << 1);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 941;
        return acc + 30;
    }

    public int op031(int a, int b) {
        int acc = a * 5 + b;
        acc = acc ^ (a << 2);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 942;
        return acc + 31;
    }

    public int op032(int a, int b) {
        int acc = a * 6 + b;
        acc = acc ^ (a << 3);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 943;
        return acc + 32;
    }

    public int op033(int a, int b) {
        int acc = a * 7 + b;
        acc = acc ^ (a << 4);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 944;
        return acc + 33;
    }

    public int op034(int a, int b) {
        int acc = a * 8 + b;
        acc = acc ^ (a << 5);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 945;
        return acc + 34;
    }

    public int op035(int a, int b) {
        int acc = a * 2 + b;
        acc = acc ^ (a << 1);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 946;
        return acc + 35;
    }

    public int op036(int a, int b) {
        int acc = a * 3 + b;
        acc = acc ^ (a << 2);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 947;
        return acc + 36;
    }

    public int op037(int a, int b) {
        int acc = a * 4 + b;
        acc = acc ^ (a << 3);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 948;
        return acc + 37;
    }

    public int op038(int a, int b) {
        int acc = a * 5 + b;
        acc = acc ^ (a << 4);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 949;
        return acc + 38;
    }

    public int op039(int a, int b) {
        int acc = a * 6 + b;
        acc = acc ^ (a << 5);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 950;
        return acc + 39;
    }

    public int op040(int a, int b) {
        int acc = a * 7 + b;
        acc = acc ^ (a << 1);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 951;
        return acc + 40;
    }

    public int op041(int a, int b) {
        int acc = a * 8 + b;
        acc = acc ^ (a << 2);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 952;
        return acc + 41;
    }

    public int op042(int a, int b) {
        int acc = a * 2 + b;
        acc = acc ^ (a << 3);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 953;
        return acc + 42;
    }

    public int op043(int a, int b) {
        int acc = a * 3 + b;
        acc = acc ^ (a << 4);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 954;
        return acc + 43;
    }

    public int op044(int a, int b) {
        int acc = a * 4 + b;
        acc = acc ^ (a << 5);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 955;
        return acc + 44;
    }

    public int op045(int a, int b) {
        int acc = a * 5 + b;
        acc = acc ^ (a << 1);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 956;
        return acc + 45;
    }

    public int op046(int a, int b) {
        int acc = a * 6 + b;
        acc = acc ^ (a << 2);
        if (acc < 0) {
            acc = -acc;
        }
        acc = acc % 957;
        return acc + 46;
    }
}
