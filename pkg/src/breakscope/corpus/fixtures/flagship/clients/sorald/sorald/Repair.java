package sorald;

import spoon.Launcher;
import spoon.compiler.Environment;
import spoon.support.JavaOutputProcessor;

public class Repair {
    public void configure(Launcher launcher) {
        Environment env = launcher.getEnvironment();
        env.setAutoImports(true);
        JavaOutputProcessor out = new JavaOutputProcessor();
        Object printer = out.getPrinter();
    }
}
