package client00.work;

import core.Node0;
import core.Node1;
import core.Node10;
import core.Node11;
import core.Node12;
import core.Node14;
import core.Node15;
import core.Node16;
import core.Node17;
import core.Node18;
import core.Node19;
import core.Node2;
import core.Node3;
import core.Node4;
import core.Node5;
import core.Node6;
import core.Node7;
import core.Node8;
import core.Node9;

public class Worker2 {
    public void step0(Node0 node0, Node1 node1, Node2 node2, Node14 node14, Node15 node15) {
        Node16 node16 = new Node16();
        Node17 node17 = new Node17();
        Node18 node18 = new Node18();
        Node19 node19 = new Node19();
        int a0 = node2.compute(0);
        node14.value = 1;
        node15.touch();
        String t3 = node16.label();
        int a4 = node17.compute(4);
        node18.value = 5;
        node19.touch();
        String t7 = node0.label();
        int a8 = node1.compute(8);
        node2.value = 9;
        node14.touch();
        String t11 = node15.label();
        int a12 = node16.compute(12);
        node17.value = 13;
    }
    public void step1(Node0 node0, Node1 node1, Node2 node2, Node14 node14, Node15 node15) {
        Node16 node16 = new Node16();
        Node17 node17 = new Node17();
        Node18 node18 = new Node18();
        Node19 node19 = new Node19();
        int a0 = node14.compute(0);
        node15.value = 1;
        node16.touch();
        String t3 = node17.label();
        int a4 = node18.compute(4);
        node19.value = 5;
        node0.touch();
        String t7 = node1.label();
        int a8 = node2.compute(8);
        node14.value = 9;
        node15.touch();
        String t11 = node16.label();
        int a12 = node17.compute(12);
        node18.value = 13;
    }
    public void step2(Node0 node0, Node1 node1, Node2 node2, Node14 node14, Node15 node15) {
        Node16 node16 = new Node16();
        Node17 node17 = new Node17();
        Node18 node18 = new Node18();
        Node19 node19 = new Node19();
        int a0 = node15.compute(0);
        node16.value = 1;
        node17.touch();
        String t3 = node18.label();
        int a4 = node19.compute(4);
        node0.value = 5;
        node1.touch();
        String t7 = node2.label();
        int a8 = node14.compute(8);
        node15.value = 9;
        node16.touch();
        String t11 = node17.label();
        int a12 = node18.compute(12);
        node19.value = 13;
    }
    public void step3(Node0 node0, Node1 node1, Node2 node2, Node14 node14, Node15 node15) {
        Node16 node16 = new Node16();
        Node17 node17 = new Node17();
        Node18 node18 = new Node18();
        Node19 node19 = new Node19();
        int a0 = node16.compute(0);
        node17.value = 1;
        node18.touch();
        String t3 = node19.label();
        int a4 = node0.compute(4);
        node1.value = 5;
        node2.touch();
        String t7 = node14.label();
        int a8 = node15.compute(8);
        node16.value = 9;
        node17.touch();
        String t11 = node18.label();
        int a12 = node19.compute(12);
        node0.value = 13;
    }
}
